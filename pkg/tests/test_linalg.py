import numpy as np
import pytest
from numpy.testing import assert_allclose

from pseudosim.errors import ContractViolation, DimensionError
from pseudosim.linalg import (
    adjoint,
    is_hermitian,
    numerical_rank,
    penrose_residuals,
    pseudo_inverse,
    pseudo_inverse_qr,
    qr_economy_pivoted,
    svd,
)
from pseudosim.rng import SplitMix64


def test_adjoint_basic():
    m = np.array([[1, 1j], [0, 2]], dtype=np.complex128)
    assert_allclose(adjoint(m), np.array([[1, 0], [-1j, 2]]))
    assert_allclose(adjoint(np.eye(3, dtype=np.complex128)), np.eye(3))
    sym = np.array([[2.0, 1.0], [1.0, 2.0]], dtype=np.complex128)
    assert_allclose(adjoint(sym), sym)


def test_adjoint_involution_exact():
    m = SplitMix64(1).complex_normals((5, 3))
    assert (adjoint(adjoint(m)) == m).all()


def test_is_hermitian():
    assert is_hermitian(np.array([[2, 1 + 1j], [1 - 1j, 3]]), 1e-12)
    assert not is_hermitian(np.array([[0, 1], [0, 0]], dtype=complex), 1e-12)
    assert is_hermitian(np.eye(4), 0.0)
    with pytest.raises(DimensionError):
        is_hermitian(np.ones((2, 3)))


def test_matrix_validation():
    with pytest.raises(ContractViolation):
        adjoint(np.array([[np.nan, 0], [0, 1]]))
    with pytest.raises(DimensionError):
        svd(np.zeros(3))


def test_qr_identity():
    f = qr_economy_pivoted(np.eye(3))
    assert f.rank == 3
    assert_allclose(np.abs(np.diagonal(f.r)), np.ones(3), atol=1e-14)
    assert_allclose(f.q.conj().T @ f.q, np.eye(3), atol=1e-12)


def test_qr_single_column():
    f = qr_economy_pivoted(np.array([[1.0], [1.0]]))
    # phase normalization makes the factors exact, not just up-to-phase
    assert_allclose(f.q, np.array([[1.0], [1.0]]) / np.sqrt(2), atol=1e-15)
    assert_allclose(f.r, np.array([[np.sqrt(2)]]), atol=1e-15)
    assert f.rank == 1


def test_qr_rank_one():
    m = np.array([[1.0, 2.0], [2.0, 4.0]])  # det = 0
    f = qr_economy_pivoted(m, rank_tol=1e-10)
    assert f.rank == 1
    assert f.q.shape == (2, 1)
    assert f.r.shape == (1, 2)
    assert_allclose(f.q @ f.r, m[:, f.perm], atol=1e-12)


def test_qr_invariants_random():
    rng = SplitMix64(2)
    for _ in range(25):
        rows = rng.randint(1, 9)
        cols = rng.randint(1, 9)
        m = rng.complex_normals((rows, cols))
        f = qr_economy_pivoted(m)
        assert_allclose(f.q.conj().T @ f.q, np.eye(f.rank), atol=1e-10)
        assert_allclose(f.q @ f.r, m[:, f.perm], atol=1e-10)
        diag = np.abs(np.diagonal(f.r))
        assert (diag[:-1] >= diag[1:] - 1e-12).all()  # pivot ordering
        assert_allclose(np.diagonal(f.r).imag, 0.0, atol=1e-14)
        assert (np.diagonal(f.r).real >= 0).all()
        # strictly lower part is exactly zero
        assert not np.tril(f.r[:, : f.rank], -1).any()


def test_qr_zero_matrix():
    f = qr_economy_pivoted(np.zeros((3, 2)))
    assert f.rank == 0
    assert f.q.shape == (3, 0)
    assert f.r.shape == (0, 2)


def test_svd_examples():
    assert_allclose(svd(np.eye(2)).sigma, [1.0, 1.0])
    f = svd(np.array([[3.0, 0.0], [0.0, 0.0]]))
    assert f.rank == 1
    assert_allclose(f.sigma, [3.0])
    assert_allclose(svd(np.ones((2, 2))).sigma, [2.0], atol=1e-14)


def test_svd_reconstruction():
    m = SplitMix64(3).complex_normals((6, 4))
    f = svd(m)
    assert_allclose((f.u * f.sigma) @ f.v.conj().T, m, atol=1e-12)
    assert (np.diff(f.sigma) <= 0).all()


def test_numerical_rank():
    assert numerical_rank(np.eye(5)) == 5
    assert numerical_rank(np.zeros((3, 4))) == 0
    rng = SplitMix64(4)
    u = rng.complex_normals((6, 1))
    v = rng.complex_normals((4, 1))
    assert numerical_rank(u @ v.conj().T) == 1


def test_pseudo_inverse_column_unitary():
    q, _ = np.linalg.qr(SplitMix64(5).complex_normals((7, 3)))
    assert np.abs(pseudo_inverse(q) - q.conj().T).max() < 1e-10


def test_pseudo_inverse_examples():
    assert_allclose(pseudo_inverse(np.diag([2.0, 0.0])), np.diag([0.5, 0.0]), atol=1e-15)
    assert_allclose(pseudo_inverse(np.array([[1.0], [1.0]])), [[0.5, 0.5]], atol=1e-15)
    z = pseudo_inverse(np.zeros((3, 5)))
    assert z.shape == (5, 3) and not z.any()


def test_penrose_conditions_random_shapes():
    rng = SplitMix64(6)
    shapes = [(5, 5), (8, 3), (3, 8), (6, 6), (7, 4), (4, 7)]
    for rows, cols in shapes:
        m = rng.complex_normals((rows, cols))
        assert max(penrose_residuals(m, pseudo_inverse(m))) < 1e-8
        # rank-deficient variant of the same shape
        r = max(1, min(rows, cols) - 1)
        md = rng.complex_normals((rows, r)) @ rng.complex_normals((r, cols))
        assert max(penrose_residuals(md, pseudo_inverse(md))) < 1e-8


def test_penrose_shape_mismatch():
    with pytest.raises(DimensionError):
        penrose_residuals(np.eye(3), np.eye(2))


def test_qr_route_agrees_with_svd_route():
    rng = SplitMix64(7)
    for _ in range(25):
        rows = rng.randint(2, 9)
        cols = rng.randint(1, rows)
        m = rng.complex_normals((rows, cols))
        p1 = pseudo_inverse(m)
        p2 = pseudo_inverse_qr(m)
        assert np.abs(p1 - p2).max() <= 1e-8 * max(1.0, np.abs(p1).max())


def test_qr_route_requires_full_column_rank():
    with pytest.raises(ContractViolation):
        pseudo_inverse_qr(np.array([[1.0, 2.0], [2.0, 4.0]]))


def test_rank_consistency_qr_vs_svd():
    rng = SplitMix64(8)
    for _ in range(25):
        n, k = rng.randint(2, 8), rng.randint(2, 8)
        l = rng.randint(1, min(n, k))
        m = rng.complex_normals((n, l)) @ rng.complex_normals((l, k))
        assert qr_economy_pivoted(m).rank == svd(m).rank == l
