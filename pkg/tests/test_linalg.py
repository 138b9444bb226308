import numpy as np
import pytest
from hypothesis import given, strategies as st

from cilab import linalg as la
from cilab.catalog import TypeTag, construct_type, curvature_algebra
from cilab.curvature import CurvatureModel

e = la.unit


def seeds():
    return st.integers(0, 2 ** 32 - 1)


def randvec(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


# ---------------------------------------------------------------- wedge

def test_wedge_on_basis():
    np.testing.assert_allclose(la.wedge(e(3, 0), e(3, 1)) @ la.realify(e(3, 0)), la.realify(e(3, 1)))
    np.testing.assert_array_equal(la.wedge(e(3, 0), e(3, 0)), 0)


def test_real_wedge_acts_componentwise():
    W = la.real_wedge(np.eye(3)[0], np.eye(3)[1])
    np.testing.assert_allclose(W @ la.realify(1j * e(3, 0)), la.realify(1j * e(3, 1)))


def test_wedge_dimension_mismatch():
    with pytest.raises(ValueError):
        la.wedge(e(2, 0), e(3, 0))


@given(seeds())
def test_wedge_skew_and_antisymmetric(seed):
    rng = np.random.default_rng(seed)
    x, y = randvec(rng, 4), randvec(rng, 4)
    A = la.wedge(x, y)
    assert np.max(np.abs(A + A.T)) <= 1e-10
    np.testing.assert_array_equal(A, -la.wedge(y, x))


# ---------------------------------------------------------------- real forms

def test_split_real_imag_examples():
    a, b = la.split_real_imag(e(2, 0) + 1j * e(2, 1), 0.0)
    np.testing.assert_allclose(a, [1, 0])
    np.testing.assert_allclose(b, [0, 1])
    # e1 = e^{i pi/2} (0 + i(-e1))
    a, b = la.split_real_imag(e(2, 0), np.pi / 2)
    np.testing.assert_allclose(a, [0, 0], atol=1e-15)
    np.testing.assert_allclose(b, [-1, 0], atol=1e-15)
    a, b = la.split_real_imag(np.zeros(2), 0.7)
    assert not a.any() and not b.any()


def test_split_real_imag_round_trip(rng):
    for _ in range(1000):
        u = randvec(rng, 3)
        phi = rng.uniform(0, np.pi)
        re, im = la.split_real_imag(u, phi, embedded=True)
        assert np.max(np.abs(re + 1j * im - u)) <= 1e-12
        # both parts lie in e^{i phi} R^n
        assert np.max(np.abs(np.imag(np.exp(-1j * phi) * re))) <= 1e-12
        assert np.max(np.abs(np.imag(np.exp(-1j * phi) * im))) <= 1e-12


# ---------------------------------------------------------------- subspaces

def test_span_orthonormal_examples():
    S = la.span_orthonormal([e(2, 0), 2 * e(2, 0)])
    assert S.dim == 1
    assert abs(abs(S.vectors[0][0]) - 1) < 1e-12
    assert la.span_orthonormal([e(2, 0), 1j * e(2, 0)]).dim == 2
    S = la.span_orthonormal([e(3, 0) + e(3, 1), e(3, 0) - e(3, 1)])
    assert la.subspace_equal(S, la.span_orthonormal([e(3, 0), e(3, 1)]))
    assert la.span_orthonormal([], n=3).dim == 0


def test_basis_is_orthonormal(rng):
    S = la.span_orthonormal([randvec(rng, 4) for _ in range(5)])
    np.testing.assert_allclose(S.basis.T @ S.basis, np.eye(5), atol=1e-10)


def test_intersect_examples():
    n = 3
    A = la.span_orthonormal([e(n, 0), e(n, 1)])
    B = la.span_orthonormal([e(n, 1), e(n, 2)])
    assert la.subspace_equal(la.intersect(A, B), la.span_orthonormal([e(n, 1)]))
    C = la.span_orthonormal([e(n, 0), 1j * e(n, 0)])
    assert la.subspace_equal(la.intersect(C, la.real_form(n)), la.span_orthonormal([e(n, 0)]))
    c1p = la.span_orthonormal([e(n, 0) - 1j * e(n, 1), e(n, 1) + 1j * e(n, 0)])
    assert la.intersect(c1p, la.real_form(n)).dim == 0


def test_orth_complement_examples():
    assert la.orth_complement(la.zero_subspace(1)).dim == 2
    C = la.orth_complement(la.span_orthonormal([e(2, 0), 1j * e(2, 0)]))
    assert la.subspace_equal(C, la.span_orthonormal([e(2, 1), 1j * e(2, 1)]))
    C = la.orth_complement(la.span_orthonormal([e(1, 0)]))
    assert la.subspace_equal(C, la.span_orthonormal([1j * e(1, 0)]))


def test_contains_examples():
    C = la.span_orthonormal([e(2, 0), 1j * e(2, 0)])
    assert la.contains(C, 1j * e(2, 0))
    assert not la.contains(la.span_orthonormal([e(2, 0), 1j * e(2, 1)]), e(2, 1))
    assert la.contains(C, np.zeros(2))


@given(seeds(), st.integers(1, 4), st.integers(0, 8))
def test_complement_duality(seed, n, d):
    rng = np.random.default_rng(seed)
    d = min(d, 2 * n)
    W = la.span_orthonormal([randvec(rng, n) for _ in range(d)], n=n)
    C = la.orth_complement(W)
    assert W.dim + C.dim == 2 * n
    assert la.intersect(W, C).dim == 0


def test_principal_angles_and_distance(rng):
    W = la.span_orthonormal([randvec(rng, 3) for _ in range(2)])
    M = np.linalg.qr(rng.standard_normal((2, 2)))[0]
    W2 = la.span_real(W.basis @ M)
    assert np.max(la.principal_angles(W, W2)) <= 1e-7
    assert la.subspace_distance(W, W2) <= 1e-10


# ---------------------------------------------------------------- complex bilinear form

def test_complex_bilinear_examples():
    assert la.complex_bilinear(e(2, 0), e(2, 0)) == 1
    v = e(2, 0) - 1j * e(2, 1)
    assert abs(la.complex_bilinear(v, v)) == 0
    assert la.complex_bilinear(1j * e(2, 0), 1j * e(2, 0)) == -1


def test_complex_bilinear_symmetric_and_linear(rng):
    for _ in range(1000):
        u, v = randvec(rng, 3), randvec(rng, 3)
        assert abs(la.complex_bilinear(u, v) - la.complex_bilinear(v, u)) <= 1e-12
        assert abs(la.complex_bilinear(1j * u, v) - 1j * la.complex_bilinear(u, v)) <= 1e-12


# ---------------------------------------------------------------- algebras

def E(n, a, b):
    return la.real_wedge(np.eye(n)[a], np.eye(n)[b])


def test_algebra_closure_examples():
    assert la.algebra_closure([E(3, 0, 1)]).dim == 1
    assert la.algebra_closure([E(3, 0, 1), E(3, 1, 2)]).dim == 3
    assert la.algebra_closure([], n=3).dim == 0


def test_algebra_closure_idempotent():
    A = la.algebra_closure([E(4, 0, 1), E(4, 1, 2), la.complex_structure(4)])
    B = la.algebra_closure(list(A.basis))
    assert A.dim == B.dim == 4
    for X in B.basis:
        assert A.residual(X) <= 1e-8
    assert A.bracket_residual() <= 1e-8


def test_algebra_closure_rejects_mismatched_shapes():
    with pytest.raises(ValueError):
        la.algebra_closure([E(3, 0, 1), E(4, 0, 1)])


def test_centralizer_examples():
    V = la.span_orthonormal([e(3, 0), e(3, 1), 1j * e(3, 2)])
    zero = la.operator_algebra([], 3)
    assert la.centralizer_in_so(zero, V).shape[0] == 3
    plane = la.span_orthonormal([e(1, 0), 1j * e(1, 0)])
    rot = la.operator_algebra([la.complex_structure(1)], 1)
    Z = la.centralizer_in_so(rot, plane)
    assert Z.shape[0] == 1
    assert la.span_residual(Z, la.complex_structure(1)) <= 1e-10


def test_intertwiners_of_complex_line():
    # h_W for W = C e1 is R J; on V = C e1 + C e2 only complex-linear maps survive
    m = CurvatureModel("grassmannian2", 2)
    W = la.span_orthonormal([e(2, 0), 1j * e(2, 0)])
    U = la.span_orthonormal([e(2, 1), 1j * e(2, 1)])
    V = la.sum_subspaces(W, U)
    A = curvature_algebra(m, W)
    P = V.projector
    A_V = la.operator_algebra([P @ X @ P for X in A.basis], 2)
    L = la.intertwiner_space(A_V, W, U)
    assert L.shape[0] == 2
    zero = la.operator_algebra([], 2)
    assert la.intertwiner_space(zero, W, U).shape[0] == 4


@given(seeds())
def test_intertwiner_dimension_symmetric(seed):
    rng = np.random.default_rng(seed)
    A = la.algebra_closure([la.complex_structure(3), E(3, 0, 1)])
    W = la.span_orthonormal([e(3, 0), 1j * e(3, 0), e(3, 1), 1j * e(3, 1)])
    U = la.span_orthonormal([e(3, 2), 1j * e(3, 2)])
    g = rng.standard_normal()
    # rescaling a generator must not matter
    A2 = la.operator_algebra(list(A.basis * g), 3) if abs(g) > 1e-3 else A
    assert la.intertwiner_space(A2, W, U).shape[0] == la.intertwiner_space(A2, U, W).shape[0]


def test_invariance_violation_raises():
    A = la.operator_algebra([E(2, 0, 1)], 2)
    with pytest.raises(la.InvarianceError):
        la.intertwiner_space(A, la.span_orthonormal([e(2, 0)]), la.span_orthonormal([1j * e(2, 1)]))


# ---------------------------------------------------------------- isotypic decomposition

def _check_pieces(A, S, comps):
    total = 0
    for i, c in enumerate(comps):
        total += c.subspace.dim
        for X in A.basis:
            assert la.invariance_residual(X, c.subspace) <= 1e-8
        for c2 in comps[i + 1:]:
            assert la.is_orthogonal(c.subspace, c2.subspace)
    assert total == S.dim


def test_isotypic_c2_complement_is_one_complex_piece():
    n = 5
    m = CurvatureModel("grassmannian2", n)
    t = TypeTag("c_k", 2, 0, 0.0, {"W0": np.eye(n)[:, :2]})
    W = construct_type(t, n)
    A = curvature_algebra(m, W)
    C = la.orth_complement(W)
    comps = la.isotypic_decomposition(A, C)
    _check_pieces(A, C, comps)
    assert [(c.subspace.dim, c.kind) for c in comps] == [(6, "complex")]


def test_isotypic_tr22_pieces():
    n = 5
    m = CurvatureModel("grassmannian2", n)
    I = np.eye(n)
    t = TypeTag("tr_kl", 2, 2, 0.0, {"W1": I[:, :2], "W2": I[:, 2:4]})
    W = construct_type(t, n)
    A = curvature_algebra(m, W)
    C = la.orth_complement(W)
    comps = la.isotypic_decomposition(A, C)
    _check_pieces(A, C, comps)
    iW1 = la.span_orthonormal([1j * e(n, 0), 1j * e(n, 1)])
    W2 = la.span_orthonormal([e(n, 2), e(n, 3)])
    rest = la.span_orthonormal([e(n, 4), 1j * e(n, 4)])
    got = [c.subspace for c in comps]
    for want in (iW1, W2, rest):
        assert sum(la.subspace_equal(g, want) for g in got) == 1
    assert len(comps) == 3


def test_isotypic_trivial_algebra():
    S = la.span_orthonormal([e(2, 0), 1j * e(2, 1)])
    comps = la.isotypic_decomposition(la.operator_algebra([], 2), S)
    assert len(comps) == 1 and comps[0].kind == "trivial" and comps[0].subspace.dim == 2


def test_isotypic_rerun_on_piece():
    n = 4
    m = CurvatureModel("grassmannian2", n)
    t = TypeTag("c_k", 1, 0, 0.0, {"W0": np.eye(n)[:, :1]})
    W = construct_type(t, n)
    A = curvature_algebra(m, W)
    C = la.orth_complement(W)
    for c in la.isotypic_decomposition(A, C):
        again = la.isotypic_decomposition(A, c.subspace)
        assert len(again) == 1 and la.subspace_equal(again[0].subspace, c.subspace)


def test_family_member_projective_invariance():
    n = 5
    m = CurvatureModel("grassmannian2", n)
    t = TypeTag("tr_kl", 2, 0, 0.0, {"W1": np.eye(n)[:, :2], "W2": np.zeros((n, 0))})
    W = construct_type(t, n)
    A = curvature_algebra(m, W)
    comps = la.isotypic_decomposition(A, la.orth_complement(W))
    comp = max(comps, key=lambda c: c.multiplicity)
    assert comp.multiplicity >= 2
    k = comp.multiplicity
    c = np.arange(1.0, k + 1)
    S1 = la.isotypic_family_member(comp, c)
    S2 = la.isotypic_family_member(comp, 2 * c)
    assert la.subspace_equal(S1, S2)
    first = la.isotypic_family_member(comp, np.eye(k)[0])
    assert la.subspace_equal(first, comp.irreducibles[0])
    with pytest.raises(ValueError):
        la.isotypic_family_member(comp, np.zeros(k))
