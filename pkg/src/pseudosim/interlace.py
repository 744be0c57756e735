"""Interlacing verification and structural-zero bookkeeping.

Given the sorted spectrum ``lam`` of the reference Hermitian matrix (length
N) and the sorted compressed values ``eta`` (length L <= N), the interlacing
property bounds every compressed value by
``lam[l] <= eta[l] <= lam[N - L + l]``.  Rank-deficient transforms carry
additional forced zeros in their spectra; :func:`extract_nonzero` separates
those from the genuinely interlaced values by count, not by threshold alone,
and refuses to guess when the separation is ambiguous.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eigen import REALNESS_TOL, Spectrum, spectral_scale
from .errors import ClassificationError, ContractViolation, DimensionError, RealnessViolation

#: relative factor for the default interlacing tolerance (times max(1, |lam|))
INTERLACE_REL_TOL = 1e-7

#: default relative threshold below which a counted zero is accepted as structural
ZERO_REL_TOL = 1e-7


def default_interlacing_tol(lam) -> float:
    return INTERLACE_REL_TOL * spectral_scale(lam)


@dataclass
class IndexBounds:
    """One interlacing inequality: lower <= value <= upper, with margins."""

    index: int
    lower: float
    value: float
    upper: float
    lower_margin: float  # value - lower
    upper_margin: float  # upper - value


@dataclass
class InterlacingReport:
    n: int
    l: int
    lam: np.ndarray
    eta: np.ndarray
    per_index: list[IndexBounds]
    passed: bool
    tol_used: float
    vacuous: bool = False

    def min_margins(self) -> tuple[float, float]:
        """Smallest (lower, upper) margins over all indices; +inf when vacuous."""
        if not self.per_index:
            return float("inf"), float("inf")
        return (
            min(b.lower_margin for b in self.per_index),
            min(b.upper_margin for b in self.per_index),
        )


def _require_sorted(values, name):
    values = np.asarray(values, dtype=np.float64).ravel()
    if values.size > 1 and np.any(np.diff(values) < 0):
        raise ContractViolation(f"{name} must be sorted non-decreasing")
    return values


def check_interlacing(lam, eta, tol: float | None = None) -> InterlacingReport:
    """Verify lam[l] - tol <= eta[l] <= lam[N-L+l] + tol for every index.

    Both inputs must be sorted non-decreasing.  An empty ``eta`` passes
    vacuously, flagged as such in the report.  The default tolerance is
    additive and scale-relative: 1e-7 * max(1, max |lam|).
    """
    lam = _require_sorted(lam, "lam")
    eta = _require_sorted(eta, "eta")
    n, l = lam.size, eta.size
    if l > n:
        raise DimensionError(f"compressed spectrum longer than reference: {l} > {n}")
    if tol is None:
        tol = default_interlacing_tol(lam)

    per_index = []
    passed = True
    for i in range(l):
        lower, upper, value = lam[i], lam[n - l + i], eta[i]
        bound = IndexBounds(
            index=i,
            lower=float(lower),
            value=float(value),
            upper=float(upper),
            lower_margin=float(value - lower),
            upper_margin=float(upper - value),
        )
        per_index.append(bound)
        if bound.lower_margin < -tol or bound.upper_margin < -tol:
            passed = False
    return InterlacingReport(
        n=n, l=l, lam=lam, eta=eta, per_index=per_index,
        passed=passed, tol_used=float(tol), vacuous=(l == 0),
    )


def classify_real(spectrum, realness_tol: float | None = None) -> np.ndarray:
    """Real parts, sorted non-decreasing, of a spectrum that must be real.

    Raises :class:`RealnessViolation` listing the offending eigenvalues when
    any imaginary part exceeds ``realness_tol * max(1, max |value|)``.
    Accepts a :class:`Spectrum` or any complex sequence.
    """
    if isinstance(spectrum, Spectrum):
        if realness_tol is None:
            realness_tol = spectrum.realness_tol
        values = spectrum.values
    else:
        values = np.asarray(spectrum, dtype=np.complex128).ravel()
    if realness_tol is None:
        realness_tol = REALNESS_TOL
    if values.size == 0:
        return np.zeros(0, dtype=np.float64)
    tol = realness_tol * spectral_scale(values)
    bad = np.abs(values.imag) > tol
    if bad.any():
        raise RealnessViolation(
            f"{int(bad.sum())} eigenvalue(s) exceed realness tolerance {tol:.3e}: "
            f"{values[bad]}", offenders=values[bad],
        )
    return np.sort(values.real)


def extract_nonzero(spectrum, expected_l: int, zero_tol: float = ZERO_REL_TOL):
    """Split K real eigenvalues into L nonzero values and K - L structural zeros.

    The K - L values of smallest magnitude are taken as the structural zeros;
    each must then actually lie below ``zero_tol`` times the spectral scale or
    a :class:`ClassificationError` is raised (wrong rank, or a genuine
    eigenvalue too close to zero to separate; surfaced rather than decided
    here).  Returns ``(nonzero sorted non-decreasing, zero count)``.
    """
    values = classify_real(spectrum) if isinstance(spectrum, Spectrum) else \
        np.asarray(spectrum, dtype=np.float64).ravel()
    k = values.size
    if not 0 <= expected_l <= k:
        raise DimensionError(f"expected rank {expected_l} outside [0, {k}]")
    n_zero = k - expected_l
    order = np.argsort(np.abs(values), kind="stable")
    zeros = values[order[:n_zero]]
    nonzero = values[order[n_zero:]]
    threshold = zero_tol * spectral_scale(values)
    if zeros.size and float(np.abs(zeros).max()) > threshold:
        raise ClassificationError(
            f"counted structural zeros are not below {threshold:.3e}: {np.sort(zeros)}"
        )
    return np.sort(nonzero), int(n_zero)
