import numpy as np
import pytest
from numpy.testing import assert_allclose

from pseudosim.eigen import eigvals_general, eigvals_hermitian, match_distance
from pseudosim.ensembles import (
    hermitian_with_spectrum,
    random_full_column_rank,
    random_unitary,
    selection_matrix,
)
from pseudosim.errors import ContractViolation, DimensionError, NumericalError
from pseudosim.interlace import check_interlacing, classify_real
from pseudosim.linalg import is_hermitian, numerical_rank, pseudo_inverse
from pseudosim.oracles import charpoly_eigenvalues
from pseudosim.rng import SplitMix64
from pseudosim.transforms import (
    build_rank_deficient,
    inflate_transform,
    oblique_transform,
    pseudo_similarity,
    unitary_compression,
)

SQ2 = np.sqrt(2.0)


def _hermitian(rng, n):
    g = rng.complex_normals((n, n))
    return (g + g.conj().T) / 2


def test_pseudo_similarity_selection():
    p = np.diag([1.0, 2.0, 3.0]).astype(complex)
    h = np.eye(3, dtype=complex)[:, :2]
    res = pseudo_similarity(p, h)
    assert_allclose(res.transformed, np.diag([1.0, 2.0]), atol=1e-14)
    assert res.input_rank == 2
    assert res.hermitian
    assert res.construction == "pseudo_similarity"


def test_pseudo_similarity_1x1():
    p = np.array([[2.0, 1.0], [1.0, 2.0]], dtype=complex)
    res = pseudo_similarity(p, np.array([[1.0], [0.0]]))
    assert_allclose(res.transformed, [[2.0]], atol=1e-14)
    lam = eigvals_hermitian(p).real_sorted()
    assert_allclose(lam, [1.0, 3.0], atol=1e-14)
    assert check_interlacing(lam, [2.0]).passed


def test_pseudo_similarity_identity_input():
    rng = SplitMix64(40)
    h = random_full_column_rank(rng, 6, 4)
    res = pseudo_similarity(np.eye(6, dtype=complex), h)
    assert_allclose(res.transformed, np.eye(4), atol=1e-10)


def test_pseudo_similarity_contracts():
    p = np.diag([1.0, 2.0]).astype(complex)
    with pytest.raises(DimensionError):
        pseudo_similarity(p, np.ones((3, 1)))
    with pytest.raises(ContractViolation):
        pseudo_similarity(np.array([[0.0, 1.0], [0.0, 0.0]]), np.ones((2, 1)))
    with pytest.raises(DimensionError):
        pseudo_similarity(np.ones((2, 3)), np.ones((2, 1)))


def test_pseudo_similarity_rank_zero():
    res = pseudo_similarity(np.eye(2, dtype=complex), np.zeros((2, 3)))
    assert res.input_rank == 0
    assert not res.transformed.any()


def test_generally_not_hermitian():
    # existential: the seeded ensemble witnesses a non-Hermitian transform
    rng = SplitMix64(41)
    p = _hermitian(rng, 4)
    h = random_full_column_rank(rng, 4, 2, condition_cap=50.0)
    res = pseudo_similarity(p, h)
    assert not res.hermitian
    # yet its spectrum is still real
    classify_real(eigvals_general(res.transformed), 1e-8)


def test_unitary_compression_identity():
    rng = SplitMix64(42)
    p = _hermitian(rng, 3)
    res = unitary_compression(p, np.eye(3, dtype=complex))
    assert_allclose(res.transformed, p, atol=1e-14)


def test_unitary_compression_selection():
    p = np.diag([1.0, 2.0, 3.0]).astype(complex)
    q = selection_matrix([0, 2], 3)
    assert_allclose(unitary_compression(p, q).transformed, np.diag([1.0, 3.0]), atol=1e-15)


def test_unitary_compression_rayleigh():
    p = np.array([[2.0, 1.0], [1.0, 2.0]], dtype=complex)
    q = np.array([[1.0], [1.0]]) / SQ2
    res = unitary_compression(p, q)
    assert_allclose(res.transformed, [[3.0]], atol=1e-14)  # the top eigenvalue


def test_unitary_compression_rejects_oblique_frame():
    p = np.eye(2, dtype=complex)
    with pytest.raises(ContractViolation):
        unitary_compression(p, np.array([[1.0], [1.0]]))


def test_subsumption_routes_agree():
    rng = SplitMix64(43)
    for _ in range(30):
        n = rng.randint(2, 10)
        l = rng.randint(1, n)
        p = _hermitian(rng, n)
        q = random_unitary(rng, n, l)
        a = unitary_compression(p, q).transformed
        b = pseudo_similarity(p, q).transformed
        assert np.abs(a - b).max() <= 1e-9


def test_build_rank_deficient_embedding():
    h = SplitMix64(44).complex_normals((4, 2))
    v = np.eye(5, dtype=complex)[:, :2]
    padded = build_rank_deficient(h, v)
    assert_allclose(padded[:, :2], h)
    assert not padded[:, 2:].any()


def test_build_rank_deficient_hand_case():
    h = np.array([[1.0], [0.0]])
    v = np.array([[1.0], [1.0]]) / SQ2
    out = build_rank_deficient(h, v)
    assert_allclose(out, [[1 / SQ2, 1 / SQ2], [0.0, 0.0]], atol=1e-15)
    assert numerical_rank(out) == 1


def test_build_rank_deficient_contracts():
    h = SplitMix64(45).complex_normals((4, 2))
    with pytest.raises(ContractViolation):
        build_rank_deficient(h, np.ones((5, 2)))  # v not orthonormal
    with pytest.raises(DimensionError):
        build_rank_deficient(h, np.eye(5, dtype=complex)[:, :3])
    rank1 = np.outer([1.0, 2.0], [1.0, 1.0]).astype(complex)
    with pytest.raises(ContractViolation):
        build_rank_deficient(rank1, np.eye(2, dtype=complex))


def test_rank_preserved_by_construction():
    rng = SplitMix64(46)
    for _ in range(10):
        n, l = rng.randint(2, 8), rng.randint(1, 4)
        l = min(l, n)
        k = rng.randint(l, 12)
        out = build_rank_deficient(random_full_column_rank(rng, n, l), random_unitary(rng, k, l))
        assert numerical_rank(out) == l


def test_inflate_identity_embedding():
    # embedding v puts the core transform in the top-left block, zeros elsewhere
    rng = SplitMix64(47)
    p = _hermitian(rng, 4)
    h = random_full_column_rank(rng, 4, 2)
    v = np.eye(6, dtype=complex)[:, :2]
    res = inflate_transform(p, h, v)
    core = pseudo_similarity(p, h).transformed
    assert_allclose(res.transformed[:2, :2], core, atol=1e-10)
    assert np.abs(res.transformed[2:, :]).max() < 1e-12
    assert np.abs(res.transformed[:, 2:]).max() < 1e-12
    assert res.route_deviation is not None and res.route_deviation <= 1e-8


def test_inflate_square_v_is_similarity():
    rng = SplitMix64(48)
    p = _hermitian(rng, 5)
    h = random_full_column_rank(rng, 5, 3)
    v = random_unitary(rng, 3, 3)
    res = inflate_transform(p, h, v)
    core = pseudo_similarity(p, h).transformed
    dev = match_distance(eigvals_general(res.transformed).values,
                         eigvals_general(core).values)
    assert dev < 1e-9


def test_inflate_hand_case():
    p = np.diag([1.0, 3.0]).astype(complex)
    h = np.array([[1.0], [0.0]])
    v = np.array([[1.0], [1.0]]) / SQ2
    res = inflate_transform(p, h, v)
    assert_allclose(res.transformed, [[0.5, 0.5], [0.5, 0.5]], atol=1e-14)
    w = np.sort(eigvals_general(res.transformed).values.real)
    assert_allclose(w, [0.0, 1.0], atol=1e-14)  # one interlaced value, one structural zero


def test_factorization_consistency():
    # pinv(h v^H) = v pinv(h) for orthonormal-column v
    rng = SplitMix64(49)
    for _ in range(10):
        n, l = rng.randint(2, 7), rng.randint(1, 4)
        l = min(l, n)
        k = rng.randint(l, 10)
        h = random_full_column_rank(rng, n, l)
        v = random_unitary(rng, k, l)
        lhs = pseudo_inverse(build_rank_deficient(h, v))
        rhs = v @ pseudo_inverse(h)
        assert np.abs(lhs - rhs).max() <= 1e-8


def test_inflate_route_disagreement_raises():
    # corrupting one route's input past the tolerance must raise, carrying both routes
    p = np.diag([1.0, 3.0]).astype(complex)
    h = np.array([[1.0], [0.0]])
    bad_v = np.array([[1.0], [1.0]]) / SQ2 * (1 + 5e-8)  # barely non-orthonormal
    try:
        inflate_transform(p, h, bad_v)
    except (NumericalError, ContractViolation):
        pass  # either guard may fire depending on where the drift is caught
    else:
        pytest.fail("perturbed construction slipped through both guards")


def test_oblique_identity_is_selection():
    p = np.diag([1.0, 2.0, 3.0]).astype(complex)
    res = oblique_transform(p, np.eye(3, dtype=complex), [0, 2])
    assert_allclose(res.transformed, np.diag([1.0, 3.0]), atol=1e-14)
    lam = eigvals_hermitian(p).real_sorted()
    eta = classify_real(eigvals_general(res.transformed))
    assert check_interlacing(lam, eta).passed


def test_oblique_unitary_interlaces():
    rng = SplitMix64(50)
    for _ in range(20):
        n = rng.randint(2, 8)
        p = _hermitian(rng, n)
        x = random_unitary(rng, n, n)
        l = rng.randint(1, n - 1) if n > 2 else 1
        sel = sorted(rng.choose_distinct(l, n))
        res = oblique_transform(p, x, sel)
        lam = eigvals_hermitian(p).real_sorted()
        eta = classify_real(eigvals_general(res.transformed), 1e-8)
        assert check_interlacing(lam, eta).passed


def test_oblique_hand_case():
    p = np.diag([1.0, 2.0, 3.0]).astype(complex)
    x = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [5.0, 0.0, 1.0]], dtype=complex)
    res = oblique_transform(p, x, [0])
    # x^-1 p x = [[1,0,0],[0,2,0],[10,0,3]]; top-left entry 1 sits inside [1, 3]
    assert_allclose(res.transformed, [[1.0]], atol=1e-12)
    assert_allclose(charpoly_eigenvalues(res.transformed), [1.0], atol=1e-12)
    assert check_interlacing([1.0, 2.0, 3.0], [1.0]).passed


def test_oblique_contracts():
    p = np.diag([1.0, 2.0]).astype(complex)
    with pytest.raises(ContractViolation):
        oblique_transform(p, np.eye(2, dtype=complex), [0, 0])
    with pytest.raises(ContractViolation):
        oblique_transform(p, np.eye(2, dtype=complex), [2])
    with pytest.raises(ContractViolation):
        oblique_transform(p, np.eye(2, dtype=complex), [])
    with pytest.raises(NumericalError):
        oblique_transform(p, np.zeros((2, 2), dtype=complex), [0])
    with pytest.raises(DimensionError):
        oblique_transform(p, np.eye(3, dtype=complex), [0])


def test_similarity_consistency_with_compression():
    # for full-column-rank h = qr, the transform's spectrum matches the
    # classical compression's spectrum as sorted multisets
    rng = SplitMix64(51)
    from pseudosim.linalg import qr_economy_pivoted

    for _ in range(15):
        n = rng.randint(2, 9)
        l = rng.randint(1, n)
        p = _hermitian(rng, n)
        h = random_full_column_rank(rng, n, l)
        f = qr_economy_pivoted(h)
        t = pseudo_similarity(p, h).transformed
        compressed = unitary_compression(p, f.q).transformed
        dev = match_distance(eigvals_general(t).values,
                             eigvals_hermitian(compressed).values)
        assert dev <= 1e-7
