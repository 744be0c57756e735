"""Dense complex matrix core: adjoints, rank-revealing factorizations, and
the Moore-Penrose pseudo-inverse.

Matrices are plain two-dimensional complex128 ``numpy`` arrays.  Every public
routine validates its input through :func:`as_matrix`, which rejects NaN/Inf
entries, so downstream code can assume finite dense data.  All functions are
pure; nothing is modified in place.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ContractViolation, DimensionError, NumericalError

EPS = float(np.finfo(np.float64).eps)

#: relative factor for the default hermiticity tolerance (times max |entry|)
HERMITICITY_REL_TOL = 1e-10

#: tolerance for "orthonormal columns" checks, max |q^H q - I|
ORTH_TOL = 1e-10


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Validate and convert to a dense 2-d complex128 array.

    Raises :class:`DimensionError` for non-2-d input and
    :class:`ContractViolation` for non-finite entries.
    """
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionError(f"{name} must be two-dimensional, got shape {m.shape}")
    if m.size and not np.isfinite(m).all():
        raise ContractViolation(f"{name} contains non-finite entries")
    return m


def default_rank_tol(shape) -> float:
    """Relative rank threshold max(rows, cols) * eps; multiplied by the
    largest singular value (or pivot magnitude) at the point of use."""
    return max(shape) * EPS


def default_hermiticity_tol(m) -> float:
    """Scale-relative hermiticity tolerance: 1e-10 times the largest entry."""
    m = np.asarray(m)
    scale = float(np.abs(m).max()) if m.size else 0.0
    return HERMITICITY_REL_TOL * scale


def adjoint(m) -> np.ndarray:
    """Conjugate transpose.  An exact involution: adjoint(adjoint(m)) == m."""
    return as_matrix(m).conj().T.copy()


def is_hermitian(m, tol: float | None = None) -> bool:
    """True iff max |m - m^H| <= tol.  `tol=None` uses the scale-relative default."""
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"hermiticity is defined for square matrices, got {m.shape}")
    if tol is None:
        tol = default_hermiticity_tol(m)
    if m.size == 0:
        return True
    return float(np.abs(m - m.conj().T).max()) <= tol


@dataclass
class QrFactors:
    """Economy column-pivoted QR truncated to the detected numerical rank.

    ``m[:, perm] ~= q @ r`` with ``q`` of orthonormal columns (rows x rank),
    ``r`` upper-trapezoidal (rank x cols) with real non-negative diagonal of
    non-increasing magnitude (pivot order).
    """

    q: np.ndarray
    r: np.ndarray
    perm: np.ndarray
    rank: int


def qr_economy_pivoted(m, rank_tol: float | None = None) -> QrFactors:
    """Rank-revealing economy QR with column pivoting.

    The numerical rank is the number of diagonal entries of the pivoted R
    whose magnitude exceeds ``rank_tol`` times the largest one; Q and R are
    truncated to that rank.  Diagonal phases are normalized so the retained
    diagonal of R is real and non-negative, making the factors reproducible.

    An all-zero matrix yields rank 0 with empty factors.
    """
    m = as_matrix(m)
    rows, cols = m.shape
    if cols < 1:
        raise DimensionError("input must have at least one column")
    if rank_tol is None:
        rank_tol = default_rank_tol(m.shape)
    if rank_tol <= 0:
        raise ContractViolation("rank_tol must be positive")

    q, r, perm = scipy.linalg.qr(m, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    dmax = float(diag.max()) if diag.size else 0.0
    rank = 0 if dmax == 0.0 else int(np.count_nonzero(diag > rank_tol * dmax))

    q = q[:, :rank].copy()
    r = r[:rank, :].copy()
    # phase normalization: H P = (Q D)(D^H R) with D = diag of diagonal phases
    for j in range(rank):
        d = r[j, j]
        if d != 0:
            phase = d / abs(d)
            q[:, j] *= phase
            r[j, :] *= np.conj(phase)
            r[j, j] = r[j, j].real  # kill rounding residue in the imaginary part
    return QrFactors(q=q, r=r, perm=perm, rank=rank)


@dataclass
class SvdFactors:
    """Thin SVD truncated to the detected numerical rank.

    ``m ~= u @ diag(sigma) @ v.conj().T`` with orthonormal-column ``u``
    (rows x rank) and ``v`` (cols x rank); ``sigma`` is non-increasing > 0.
    """

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray
    rank: int


def svd(m, rank_tol: float | None = None) -> SvdFactors:
    """Thin SVD with rank detection (singular values above rank_tol * sigma_max)."""
    m = as_matrix(m)
    if rank_tol is None:
        rank_tol = default_rank_tol(m.shape)
    if rank_tol <= 0:
        raise ContractViolation("rank_tol must be positive")
    try:
        u, s, vh = np.linalg.svd(m, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"SVD did not converge for shape {m.shape}: {exc}") from exc
    smax = float(s[0]) if s.size else 0.0
    rank = 0 if smax == 0.0 else int(np.count_nonzero(s > rank_tol * smax))
    return SvdFactors(u=u[:, :rank], sigma=s[:rank], v=vh[:rank, :].conj().T, rank=rank)


def numerical_rank(m, rank_tol: float | None = None) -> int:
    """Count of singular values above the scale-relative threshold."""
    return svd(m, rank_tol).rank


def pseudo_inverse(m, rank_tol: float | None = None) -> np.ndarray:
    """Moore-Penrose pseudo-inverse via the SVD over the detected rank.

    Satisfies the four Penrose conditions to rounding; a rank-0 input yields
    the zero matrix of transposed shape.  For full-column-rank input this
    agrees with the triangular route of :func:`pseudo_inverse_qr`.
    """
    m = as_matrix(m)
    f = svd(m, rank_tol)
    if f.rank == 0:
        return np.zeros((m.shape[1], m.shape[0]), dtype=np.complex128)
    return (f.v / f.sigma) @ f.u.conj().T


def pseudo_inverse_qr(m, rank_tol: float | None = None) -> np.ndarray:
    """Pseudo-inverse of a full-column-rank matrix as R^-1 Q^H.

    Cross-check route only; the production path is :func:`pseudo_inverse`.
    Raises :class:`ContractViolation` when the detected rank is below the
    column count, where the triangular inverse does not exist.
    """
    m = as_matrix(m)
    f = qr_economy_pivoted(m, rank_tol)
    if f.rank < m.shape[1]:
        raise ContractViolation(
            f"triangular pseudo-inverse needs full column rank, detected {f.rank} < {m.shape[1]}"
        )
    inv_permuted = scipy.linalg.solve_triangular(f.r[:, : f.rank], f.q.conj().T)
    out = np.empty_like(inv_permuted)
    out[f.perm, :] = inv_permuted  # undo column pivoting
    return out


def penrose_residuals(m, pinv) -> tuple[float, float, float, float]:
    """Max-entry residuals of the four Penrose conditions, scale-relative.

    Returned in order: ``m p m = m``, ``p m p = p``, ``(m p)^H = m p``,
    ``(p m)^H = p m``.  The first two are scaled by max(1, |m|) and
    max(1, |p|); the projector conditions are scaled by max(1, |m p|) and
    max(1, |p m|).
    """
    m = as_matrix(m, "matrix")
    p = as_matrix(pinv, "pseudo-inverse")
    if p.shape != (m.shape[1], m.shape[0]):
        raise DimensionError(f"pseudo-inverse shape {p.shape} does not match {m.shape}")
    mp = m @ p
    pm = p @ m

    def _rel(diff, ref):
        scale = max(1.0, float(np.abs(ref).max()) if ref.size else 0.0)
        return (float(np.abs(diff).max()) if diff.size else 0.0) / scale

    return (
        _rel(mp @ m - m, m),
        _rel(pm @ p - p, p),
        _rel(mp.conj().T - mp, mp),
        _rel(pm.conj().T - pm, pm),
    )
