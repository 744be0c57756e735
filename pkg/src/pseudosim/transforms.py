"""Spectrum-compressing transformations of Hermitian matrices.

The central operation is :func:`pseudo_similarity`: ``pinv(H) @ P @ H`` for a
general N x K matrix H of rank L.  Its K x K result is generally
non-Hermitian and may have more rows than P (K > N), yet its L nonzero
eigenvalues still interlace the spectrum of P.  The other routes here are the
classical unitary compression ``Q^H P Q`` (the special case where H has
orthonormal columns), the rank-deficient construction ``H V^H`` used to
exercise deflation and inflation, and the oblique compression for which the
interlacing guarantee demonstrably fails.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation, DimensionError, NumericalError
from .linalg import (
    ORTH_TOL,
    adjoint,
    as_matrix,
    default_hermiticity_tol,
    is_hermitian,
    numerical_rank,
    pseudo_inverse,
)

#: relative factor for route cross-checks (times max(1, entry scale))
CROSS_REL_TOL = 1e-8


@dataclass
class TransformResult:
    transformed: np.ndarray
    input_rank: int
    hermitian: bool
    construction: str
    route_deviation: float | None = None  # filled by dual-route transforms


def _require_hermitian(p, name="p"):
    p = as_matrix(p, name)
    if p.shape[0] != p.shape[1]:
        raise DimensionError(f"{name} must be square, got {p.shape}")
    if not is_hermitian(p):
        raise ContractViolation(f"{name} is not Hermitian within tolerance")
    return p


def _require_orthonormal_columns(v, name="matrix"):
    v = as_matrix(v, name)
    if v.shape[0] < v.shape[1]:
        raise DimensionError(f"{name} cannot have orthonormal columns with shape {v.shape}")
    gram = v.conj().T @ v
    dev = float(np.abs(gram - np.eye(v.shape[1])).max()) if v.size else 0.0
    if dev > ORTH_TOL:
        raise ContractViolation(f"{name} columns are not orthonormal (|v^H v - I| = {dev:.3e})")
    return v


def _result(t, rank, construction, route_deviation=None):
    return TransformResult(
        transformed=t,
        input_rank=int(rank),
        hermitian=is_hermitian(t, default_hermiticity_tol(t)),
        construction=construction,
        route_deviation=route_deviation,
    )


def pseudo_similarity(p, h, rank_tol: float | None = None) -> TransformResult:
    """``pinv(h) @ p @ h`` for Hermitian p (N x N) and general h (N x K).

    Any rank and any K are accepted, including K > N.  A rank-0 h yields the
    K x K zero matrix (every later interlacing check on it is vacuous and is
    flagged as such in reports).  Non-Hermitian p is rejected, not repaired.
    """
    p = _require_hermitian(p)
    h = as_matrix(h, "h")
    if h.shape[0] != p.shape[0]:
        raise DimensionError(f"h has {h.shape[0]} rows, p is {p.shape[0]} x {p.shape[0]}")
    if h.shape[1] < 1:
        raise DimensionError("h must have at least one column")
    t = pseudo_inverse(h, rank_tol) @ p @ h
    return _result(t, numerical_rank(h, rank_tol), "pseudo_similarity")


def unitary_compression(p, q) -> TransformResult:
    """``q^H p q`` for column-unitary q: the classical compression.

    Because the pseudo-inverse of a column-unitary matrix is its adjoint,
    this is the special case of :func:`pseudo_similarity` with orthonormal
    columns; the two agree to rounding, which the test suite pins down.
    """
    p = _require_hermitian(p)
    q = _require_orthonormal_columns(q, "q")
    if q.shape[0] != p.shape[0]:
        raise DimensionError(f"q has {q.shape[0]} rows, p is {p.shape[0]} x {p.shape[0]}")
    t = q.conj().T @ p @ q
    return _result(t, q.shape[1], "unitary_compression")


def build_rank_deficient(h, v) -> np.ndarray:
    """``h @ v^H``: embed a full-column-rank N x L matrix into N x K, K >= L.

    v must have orthonormal columns (K x L), which preserves the rank: the
    result has numerical rank exactly L while gaining K - L dependent
    columns.  K > N turns later transforms into dimensional inflation.
    """
    h = as_matrix(h, "h")
    v = _require_orthonormal_columns(v, "v")
    if v.shape[1] != h.shape[1]:
        raise DimensionError(f"v has {v.shape[1]} columns, expected {h.shape[1]}")
    if numerical_rank(h) != h.shape[1]:
        raise ContractViolation("h must have full column rank")
    return h @ v.conj().T


def inflate_transform(p, h, v, rank_tol: float | None = None) -> TransformResult:
    """Pseudo-similarity by the rank-deficient ``h @ v^H``, computed two ways.

    Route (a) applies :func:`pseudo_similarity` to the assembled matrix;
    route (b) conjugates the L x L core transform by v.  Both must agree to
    within ``1e-8 * max(1, entry scale)`` per entry or a
    :class:`NumericalError` carrying both matrices is raised.  Route (a) is
    returned, with the observed deviation recorded.
    """
    p = _require_hermitian(p)
    route_a = pseudo_similarity(p, build_rank_deficient(h, v), rank_tol)
    core = pseudo_similarity(p, h, rank_tol)
    v = as_matrix(v, "v")
    route_b = v @ core.transformed @ adjoint(v)
    dev = float(np.abs(route_a.transformed - route_b).max())
    scale = max(1.0, float(np.abs(route_a.transformed).max()),
                float(np.abs(route_b).max()))
    if dev > CROSS_REL_TOL * scale:
        err = NumericalError(
            f"inflation routes disagree: max entry deviation {dev:.3e} "
            f"exceeds {CROSS_REL_TOL * scale:.3e}"
        )
        err.route_a = route_a.transformed
        err.route_b = route_b
        raise err
    return TransformResult(
        transformed=route_a.transformed,
        input_rank=route_a.input_rank,
        hermitian=route_a.hermitian,
        construction="inflate_transform",
        route_deviation=dev,
    )


def oblique_transform(p, x, selection) -> TransformResult:
    """Principal submatrix of ``x^-1 p x`` at the selected indices.

    This is the compression through the oblique (non-orthogonal) projector
    built from an invertible, generally non-unitary x.  No interlacing
    guarantee attaches to the result: its spectrum need not even be real.
    ``selection`` holds distinct 0-based indices into range(N).
    """
    p = _require_hermitian(p)
    x = as_matrix(x, "x")
    if x.shape != p.shape:
        raise DimensionError(f"x must be {p.shape[0]} x {p.shape[0]}, got {x.shape}")
    sel = [int(i) for i in selection]
    if len(set(sel)) != len(sel):
        raise ContractViolation(f"selection indices must be distinct: {sel}")
    if any(i < 0 or i >= p.shape[0] for i in sel):
        raise ContractViolation(f"selection indices out of range(0, {p.shape[0]}): {sel}")
    if not sel:
        raise ContractViolation("selection must not be empty")
    try:
        similar = np.linalg.solve(x, p @ x)  # x^-1 (p x)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"x is singular to working precision: {exc}") from exc
    t = similar[np.ix_(sel, sel)]
    return _result(t, len(sel), "oblique_transform")
