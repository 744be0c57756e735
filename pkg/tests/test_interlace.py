import numpy as np
import pytest
from numpy.testing import assert_allclose

from pseudosim.eigen import Spectrum, eigvals_general
from pseudosim.errors import (
    ClassificationError,
    ContractViolation,
    DimensionError,
    RealnessViolation,
)
from pseudosim.interlace import check_interlacing, classify_real, extract_nonzero
from pseudosim.transforms import pseudo_similarity


def test_interlacing_selection_case():
    report = check_interlacing([1.0, 2.0, 3.0], [1.0, 2.0])
    assert report.passed
    assert report.per_index[0].lower_margin == 0.0
    assert report.per_index[1].upper_margin == 1.0


def test_interlacing_middle_value():
    assert check_interlacing([1.0, 3.0], [2.0]).passed


def test_interlacing_violation():
    report = check_interlacing([1.0, 2.0, 3.0], [5.0])
    assert not report.passed
    lo, hi = report.min_margins()
    assert hi == pytest.approx(-2.0)


def test_interlacing_identity_case():
    # eta = lambda passes with zero margins at both ends
    lam = [-1.0, 0.5, 2.0]
    report = check_interlacing(lam, lam)
    assert report.passed
    assert report.per_index[0].lower_margin == 0.0
    assert report.per_index[-1].upper_margin == 0.0
    assert report.min_margins() == (0.0, 0.0)


def test_interlacing_vacuous():
    report = check_interlacing([1.0, 2.0], [])
    assert report.passed and report.vacuous
    assert report.min_margins() == (np.inf, np.inf)


def test_interlacing_input_guards():
    with pytest.raises(ContractViolation):
        check_interlacing([2.0, 1.0], [1.5])
    with pytest.raises(ContractViolation):
        check_interlacing([1.0, 2.0], [2.0, 1.0])
    with pytest.raises(DimensionError):
        check_interlacing([1.0], [0.5, 1.5])


def test_interlacing_tolerance():
    lam = [1.0, 2.0]
    assert not check_interlacing(lam, [2.1], tol=1e-3).passed
    assert check_interlacing(lam, [2.1], tol=0.2).passed


def test_extract_nonzero_examples():
    nonzero, zeros = extract_nonzero([0.0, 1.0, 0.0, 2.0], 2)
    assert_allclose(nonzero, [1.0, 2.0])
    assert zeros == 2

    nonzero, zeros = extract_nonzero([1.0, 0.0], 1)
    assert_allclose(nonzero, [1.0])
    assert zeros == 1

    nonzero, zeros = extract_nonzero([-3.0, 0.0, 4.0], 2)
    assert_allclose(nonzero, [-3.0, 4.0])  # signed values retained
    assert zeros == 1


def test_extract_nonzero_misfit_rank():
    # forcing a genuine eigenvalue into the zero bucket is surfaced
    with pytest.raises(ClassificationError):
        extract_nonzero([0.5, 1e-15, 2.0], 1)
    with pytest.raises(DimensionError):
        extract_nonzero([1.0], 2)


def test_extract_nonzero_spectrum_input():
    s = Spectrum(values=np.array([2.0 + 1e-15j, 0.0 + 0j]))
    nonzero, zeros = extract_nonzero(s, 1)
    assert_allclose(nonzero, [2.0])
    assert zeros == 1


def test_rank_underestimate_is_surfaced():
    # the transform is computed at full precision (both eigenvalues genuine),
    # but a deliberately coarse rank threshold claims rank 1; the classifier
    # must refuse to absorb the second eigenvalue as a structural zero
    from pseudosim.linalg import numerical_rank

    p = np.diag([1.0, 3.0]).astype(complex)
    u = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2)
    h = u @ np.diag([1.0, 1e-3]) @ u.T
    result = pseudo_similarity(p, h)
    assert result.input_rank == 2
    coarse_rank = numerical_rank(h, rank_tol=1e-2)
    assert coarse_rank == 1
    values = classify_real(eigvals_general(result.transformed), 1e-6)
    with pytest.raises(ClassificationError):
        extract_nonzero(values, coarse_rank)


def test_classify_real():
    assert_allclose(classify_real([3 + 1e-14j, 1 - 2e-15j], 1e-10), [1.0, 3.0])
    assert classify_real([]).size == 0
    with pytest.raises(RealnessViolation) as err:
        classify_real([1j, -1j], 1e-10)
    assert len(err.value.offenders) == 2


def test_classify_real_tolerance_scaling():
    # tolerance is relative to max(1, largest magnitude)
    assert_allclose(classify_real([1e6 + 0.5j], 1e-6), [1e6])
    with pytest.raises(RealnessViolation):
        classify_real([1.0 + 0.5j], 1e-6)
