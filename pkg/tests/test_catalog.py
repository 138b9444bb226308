import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from cilab import catalog as cat
from cilab import linalg as la
from cilab.curvature import CurvatureModel, curvature_endomorphism, is_curvature_invariant

e = la.unit
I3 = np.eye(3)


def G(n, sign=1):
    return CurvatureModel("grassmannian2", n, sign)


def span(*vs):
    return la.span_orthonormal(list(vs))


# ---------------------------------------------------------------- constructors

def test_construct_examples():
    t = cat.TypeTag("tr_kl", 1, 1, 0.0, {"W1": I3[:2, :1], "W2": I3[:2, 1:2]})
    assert la.subspace_equal(cat.construct_type(t), span(e(2, 0), 1j * e(2, 1)))

    Ip = la.outer_wedge(I3[:2, 0], I3[:2, 1])
    t = cat.TypeTag("c_k_prime", 1, 0, 0.0, {"Wp": np.eye(2), "Ip": Ip})
    v = e(2, 0) - 1j * e(2, 1)
    assert la.subspace_equal(cat.construct_type(t), span(v, 1j * v))

    t = cat.TypeTag("ex2", 0, 0, 0.0, {"frame": I3})
    want = span(2 * e(3, 0) + 1j * e(3, 1), e(3, 1) + 1j * (e(3, 0) + np.sqrt(3) * e(3, 2)))
    assert la.subspace_equal(cat.construct_type(t), want)


def test_phase_rotates_subspace():
    t = cat.TypeTag("c_k", 1, 0, 0.4, {"W0": I3[:, :1]})
    # a complex line is unchanged by a phase
    assert la.subspace_equal(cat.construct_type(t), span(e(3, 0), 1j * e(3, 0)))
    t = cat.TypeTag("tr_kl", 2, 0, 0.4, {"W1": I3[:, :2], "W2": np.zeros((3, 0))})
    rot = np.exp(0.4j)
    assert la.subspace_equal(cat.construct_type(t), span(rot * e(3, 0), rot * e(3, 1)))


def test_phi_is_reduced_mod_pi():
    t = cat.TypeTag("c_k", 1, 0, np.pi + 0.25, {"W0": I3[:, :1]})
    assert abs(t.phi - 0.25) < 1e-15


@pytest.mark.parametrize("tag", [
    cat.TypeTag("c_k", 0, 0, 0.0, {"W0": np.zeros((3, 0))}),
    cat.TypeTag("tr_kl", 1, 0, 0.0, {"W1": I3[:, :1], "W2": np.zeros((3, 0))}),
    cat.TypeTag("tr_kl", 1, 1, 0.0, {"W1": I3[:, :1], "W2": (I3[:, :1] + I3[:, 1:2]) / np.sqrt(2)}),
    cat.TypeTag("c_k", 1, 0, 0.0, {"W0": 2 * I3[:, :1]}),
    cat.TypeTag("c_k_prime", 1, 0, 0.0, {"Wp": I3[:, :2], "Ip": np.eye(3)}),
    cat.TypeTag("tr_k_prime", 1, 0, 0.0, {"Wp": I3[:, :2], "Ip": la.outer_wedge(I3[0], I3[1]),
                                          "W0p": I3[:, :1]}),
    cat.TypeTag("ex2", 0, 0, 0.0, {"frame": I3[:2, :2]}),
    cat.TypeTag("tr1", 1, 0, 0.0, {"u": np.array([1.0, 1.0])}),
])
def test_invalid_tags_rejected(tag):
    with pytest.raises(cat.TypeTagError):
        cat.construct_type(tag)


def test_unknown_variant():
    with pytest.raises(cat.TypeTagError):
        cat.TypeTag("c_x")


def test_tr_prime_real_form_condition():
    n = 4
    F = np.eye(n)[:, [0, 2, 1, 3]]
    Ip = cat.hermitian_from_frame(F)
    # W0p containing a vector and its Ip image is not a real form
    bad = np.stack([np.eye(n)[0], Ip @ np.eye(n)[0]], axis=1)
    with pytest.raises(cat.TypeTagError):
        cat.construct_type(cat.TypeTag("tr_k_prime", 2, 0, 0.0, {"Wp": F, "Ip": Ip, "W0p": bad}))


def test_constructors_are_invariant(rng):
    for n in range(2, 7):
        m = G(n)
        for v in cat.VARIANTS:
            if not cat.admissible_params(v, n):
                continue
            for _ in range(50):
                W = cat.construct_type(cat.random_tag(v, n, rng), n)
                assert is_curvature_invariant(m, W).residual <= 1e-8


def test_padding_keeps_invariance(rng):
    t = cat.random_tag("ex2", 3, rng)
    W = cat.construct_type(t, 6)
    assert W.n == 6 and W.dim == 2
    assert is_curvature_invariant(G(6), W)


# ---------------------------------------------------------------- classifier

def test_classify_examples():
    m = G(3)
    assert cat.classify(m, span(e(3, 0), 1j * e(3, 1))).params == ("tr_kl", 1, 1)
    v = e(3, 0) - 1j * e(3, 1)
    assert cat.classify(m, span(v, 1j * v)).params == ("c_k_prime", 1, 0)
    W = span(e(3, 0) - 1j * e(3, 1), e(3, 1) + 1j * e(3, 0), e(3, 0) + 1j * e(3, 1))
    assert W.dim == 3
    assert cat.classify(m, W).params == ("ex3", 0, 0)
    assert cat.classify(m, span(e(3, 0), 1j * e(3, 0))).params == ("c_k", 1, 0)
    assert cat.classify(m, span(e(3, 0) + 0.5j * e(3, 2))).params == ("tr1", 1, 0)


def test_classify_rejects_non_invariant():
    with pytest.raises(cat.NotInvariantError) as info:
        cat.classify(G(2), span(e(2, 0), e(2, 1) + 1j * e(2, 0)))
    assert info.value.residual > 0.1


def test_classify_needs_grassmannian():
    with pytest.raises(ValueError):
        cat.classify(CurvatureModel("cpn", 2), span(e(2, 0)))


@given(st.sampled_from(cat.VARIANTS), st.integers(2, 6), st.integers(0, 2 ** 32 - 1))
def test_round_trip_property(variant, n, seed):
    if not cat.admissible_params(variant, n):
        return
    rng = np.random.default_rng(seed)
    m = G(n)
    t = cat.random_tag(variant, n, rng)
    W = cat.construct_type(t, n)
    back = cat.classify(m, W)
    assert back.params == t.canonical().params
    assert np.max(la.principal_angles(cat.construct_type(back, n), W)) <= 1e-7


def test_tr_kl_canonical_swap():
    # k < l is stored swapped, with the phase moved by pi/2
    n = 3
    t = cat.TypeTag("tr_kl", 1, 2, 0.3, {"W1": I3[:, :1], "W2": I3[:, 1:]})
    c = t.canonical()
    assert c.params == ("tr_kl", 2, 1)
    assert la.subspace_equal(cat.construct_type(c, n), cat.construct_type(t, n))


# ---------------------------------------------------------------- curvature algebra

def test_algebra_dimension_table():
    """Numerical rank from the bracket oracle against the closed-form table."""
    rng = np.random.default_rng(5)
    for n in range(2, 7):
        m = G(n)
        for v in cat.VARIANTS:
            for k, l in cat.admissible_params(v, n):
                t = cat.random_tag(v, n, rng, k, l)
                W = cat.construct_type(t, n)
                want = cat.expected_algebra_dim(v, k, l)
                assert oracles.curvature_span_rank(W.basis, n) == want, (v, k, l, n)
                assert cat.curvature_algebra(m, W).dim == want


def test_algebra_dimension_formulas():
    assert cat.expected_algebra_dim("c_k", 2) == 2
    assert cat.expected_algebra_dim("c_k", 4) == 7
    assert cat.expected_algebra_dim("tr_kl", 3, 2) == 4
    assert cat.expected_algebra_dim("c_k_prime", 3) == 9
    assert cat.expected_algebra_dim("tr_k_prime", 4) == 6
    assert [cat.expected_algebra_dim(v) for v in ("ex3", "ex2", "tr1")] == [1, 1, 0]


def test_algebra_preserves_its_subspace(rng):
    m = G(5)
    for v in cat.VARIANTS:
        W = cat.construct_type(cat.random_tag(v, 5, rng), 5)
        for A in cat.curvature_algebra(m, W).basis:
            assert la.invariance_residual(A, W) <= 1e-8


def test_ex2_generator_spectrum():
    t = cat.TypeTag("ex2", 0, 0, 0.0, {"frame": I3})
    x, y = cat.spanning_vectors(t)
    M = cat.complex_matrix(curvature_endomorphism(G(3), x, y))
    ev = np.sort_complex(np.linalg.eigvals(M))
    np.testing.assert_allclose(np.sort(ev.imag), [-3, -1, 1], atol=1e-8)
    np.testing.assert_allclose(ev.real, 0, atol=1e-8)


def test_ex3_generator_is_j_plus_wedge():
    t = cat.TypeTag("ex3", 0, 0, 0.0, {"frame": np.eye(2)})
    W = cat.construct_type(t)
    A = cat.curvature_algebra(G(2), W)
    gen = la.complex_structure(2) + la.real_wedge(np.eye(2)[0], np.eye(2)[1])
    assert A.dim == 1
    assert A.residual(gen / np.linalg.norm(gen)) <= 1e-10


def test_c_k_prime_algebra_contains_su(rng):
    # h_W of c_2' is u(2)-sized: su(W') + R(I' + 2J)
    n = 4
    t = cat.random_tag("c_k_prime", n, rng, 2)
    W = cat.construct_type(t, n)
    A = cat.curvature_algebra(G(n), W)
    Ip = t.payload["Ip"]
    gen = la.componentwise(Ip) + 2 * la.complex_structure(n)
    assert A.residual(gen / np.linalg.norm(gen)) <= 1e-8


# ---------------------------------------------------------------- J_theta

def test_jtheta_k2_theta0():
    rng = np.random.default_rng(0)
    t = cat.random_tag("tr_k_prime", 4, rng, 2)
    rep = cat.jtheta_structure(t, 0.0)
    assert rep["ok"]
    assert (rep["stabilizer_dims"]["plus"], rep["stabilizer_dims"]["minus"]) == (1, 1)


def test_jtheta_k3():
    rng = np.random.default_rng(1)
    t = cat.random_tag("tr_k_prime", 6, rng, 3)
    rep = cat.jtheta_structure(t, np.pi / 5)
    assert (rep["stabilizer_dims"]["plus"], rep["stabilizer_dims"]["minus"]) == (3, 3)
    # for k >= 3 the odd centralizer is the line through J_theta
    assert rep["centralizer_minus_dim"] == 1
    assert rep["jtheta_in_centralizer"] <= 1e-8


def test_jtheta_periodic():
    t = cat.random_tag("tr_k_prime", 4, np.random.default_rng(2), 2)
    a = cat.jtheta_structure(t, 0.7)
    b = cat.jtheta_structure(t, 0.7 + 2 * np.pi)
    assert a["stabilizer_dims"] == b["stabilizer_dims"]
    for key in a["residuals"]:
        assert abs(a["residuals"][key] - b["residuals"][key]) <= 1e-12


def test_jtheta_requires_tr_prime():
    with pytest.raises(cat.TypeTagError):
        cat.jtheta_structure(cat.TypeTag("c_k", 1, 0, 0.0, {"W0": I3[:, :1]}), 0.0)
