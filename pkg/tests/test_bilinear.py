import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from twistfold.bilinear import (
    P,
    BilinearError,
    compatibility_check,
    companion,
    decompose,
    det3,
    factored_coefficients,
    forward_spectral_data,
    identity_holds,
    invariants,
    nu_tilde,
    nu_tilde_inverse,
    phi_at_point,
    polynomial_identity_holds,
    random_polynomial_instance,
    random_rational_form,
    random_sl3,
    sl2_fibration,
    sl3_invariance_check,
    spectral_poly,
)

ID = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
E1 = [1, 0, 0]


def add(a, b):
    return [[a[i][j] + b[i][j] for j in range(3)] for i in range(3)]


def sympy_pb(b):
    """Coefficients of det(x0 B + x1 B^T), descending in x0, by symbolic expansion."""
    x0, x1 = sympy.symbols("x0 x1")
    m = sympy.Matrix(3, 3, lambda i, j: x0 * sympy.Rational(b[i][j]) + x1 * sympy.Rational(b[j][i]))
    poly = sympy.Poly(sympy.expand(m.det()), x0, x1)
    return [poly.coeff_monomial(x0 ** (3 - k) * x1**k) for k in range(4)]


forms = st.lists(st.lists(st.fractions(-5, 5, max_denominator=4), min_size=3, max_size=3), min_size=3, max_size=3)


def test_decompose_examples():
    d = decompose(ID)
    assert d.g == ID and all(x == 0 for x in d.v)
    d = decompose(add(ID, nu_tilde(E1)))
    assert d.g == ID and list(d.v) == E1
    d = decompose(nu_tilde([1, 2, 3]))
    assert all(x == 0 for r in d.g for x in r) and list(d.v) == [1, 2, 3]


@settings(max_examples=100, deadline=None)
@given(forms)
def test_decompose_reconstructs(b):
    d = decompose(b)
    assert d.reconstruct() == [[Fraction(x) for x in r] for r in b]
    assert nu_tilde_inverse(nu_tilde(d.v)) == list(d.v)


def test_invariant_examples():
    assert invariants(ID).as_tuple() == (1, 3, 1, 0)
    inv = invariants(add(ID, nu_tilde(E1)))
    assert (inv.s, inv.t, inv.a0) == (1, 1, 2)
    assert invariants([[0] * 3 for _ in range(3)]).as_tuple() == (0, 0, 0, 0)


def test_factored_form_example():
    # (x0 + x1)((x0 + x1)^2 + (x0 - x1)^2) = 2 x0^3 + 2 x0^2 x1 + 2 x0 x1^2 + 2 x1^3
    assert factored_coefficients(1, 1) == [2, 2, 2, 2]
    assert sympy_pb(add(ID, nu_tilde(E1))) == [2, 2, 2, 2]


@settings(max_examples=200, deadline=None)
@given(forms)
def test_pb_against_symbolic_expansion(b):
    inv = invariants(b)
    expected = sympy_pb(b)
    assert factored_coefficients(inv.s, inv.t) == expected
    assert inv.a0 == det3(b) == inv.s + inv.t
    assert identity_holds(b)


def test_sl3_invariance_examples():
    b = add(ID, nu_tilde(E1))
    assert sl3_invariance_check(b, ID)
    assert sl3_invariance_check(b, [[2, 0, 0], [0, 1, 0], [0, 0, Fraction(1, 2)]])
    rng = random.Random(5)
    for _ in range(20):
        assert sl3_invariance_check(b, random_sl3(rng))
    with pytest.raises(BilinearError):
        sl3_invariance_check(b, [[2, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_spaltenstein_seeded_batch():
    rng = random.Random(2024)
    for _ in range(200):
        b, a = random_rational_form(rng), random_sl3(rng)
        assert det3(a) == 1
        assert identity_holds(b) and sl3_invariance_check(b, a)


def test_spectral_poly_examples():
    assert spectral_poly(1, P).smooth
    assert not spectral_poly(P, P).smooth
    assert spectral_poly(1, 1).smooth
    assert not spectral_poly(P**2, 1).smooth
    assert not spectral_poly(0, P).smooth
    with pytest.raises(BilinearError):
        spectral_poly(P**3, 1, degree_bound=2)


def sympy_phi_invariants(g, v):
    """Trace and determinant of Phi_t from a nullspace basis of the complement (independent route)."""
    G = sympy.Matrix(g)
    V = sympy.Matrix(v)
    w1, w2 = (V.T * G).nullspace()
    W = sympy.Matrix.hstack(w1, w2)
    H = W.T * G * W
    c = sympy.Matrix.hstack(V, w1, w2).det()
    eta = sympy.Matrix([[0, c], [-c, 0]])
    phi = eta.T.inv() * H
    return phi.trace(), phi.det()


def test_forward_examples():
    g = [[1, 0, 0], [0, 1, 0], [0, 0, P]]
    rep = forward_spectral_data(g, E1, [Fraction(4), Fraction(1)])
    (four, one) = rep.samples
    assert (four.trace, four.det) == (0, 4)
    assert (one.trace, one.det) == (0, 1)
    assert four.phi_s is not None
    assert sympy.Matrix(four.phi_s).det() == Fraction(1, 4)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(-4, 4), min_size=6, max_size=6),
    st.lists(st.integers(-4, 4), min_size=3, max_size=3),
)
def test_phi_against_independent_basis(sym, v):
    g = [[sym[0], sym[1], sym[2]], [sym[1], sym[3], sym[4]], [sym[2], sym[4], sym[5]]]
    s = det3(g)
    t = sum(g[i][j] * v[i] * v[j] for i in range(3) for j in range(3))
    if s == 0 or t == 0:
        return
    phi = phi_at_point(g, v)
    tr, det = sympy_phi_invariants(g, v)
    assert phi[0][0] + phi[1][1] == tr == 0
    assert phi[0][0] * phi[1][1] - phi[0][1] * phi[1][0] == det == Fraction(s, t)


def test_phi_rejects_degenerate():
    with pytest.raises(BilinearError):
        phi_at_point(ID, [0, 0, 0])
    with pytest.raises(BilinearError):
        phi_at_point([[1, 0, 0], [0, -1, 0], [0, 0, 1]], [1, 1, 0])


def test_polynomial_identity_random_instances():
    rng = random.Random(9)
    for _ in range(10):
        g, v = random_polynomial_instance(rng, degree=2)
        gp = [[sympy.Poly(e, P, domain="QQ") for e in r] for r in g]
        vp = [sympy.Poly(e, P, domain="QQ") for e in v]
        assert polynomial_identity_holds(gp, vp)


def test_compatibility_examples():
    psi0 = ([0, 0], [[1, 0], [0, 1]])
    assert compatibility_check(P, P, {0: psi0})
    assert compatibility_check(P, P**2 + 5, {0: ([1, 2], [[1, 0], [0, 1]])})
    assert not compatibility_check(P, P**2 + 6, {0: ([1, 2], [[1, 0], [0, 1]])})
    with pytest.raises(BilinearError):
        compatibility_check(P**2, 1, {0: psi0})
    with pytest.raises(BilinearError):
        compatibility_check(P - 1, 1, {0: psi0})


def test_sl2_fibration_examples():
    rep = sl2_fibration(companion(0, P))
    assert (rep.a.as_expr(), rep.b.as_expr()) == (0, P)
    assert rep.affine_branch_points == 1 and rep.branch_at_infinity
    assert rep.genus == 0
    with pytest.raises(BilinearError):
        sl2_fibration(companion(2, 1))


def test_sl2_fibration_genus():
    # y^2 = quintic: five affine branch points plus infinity
    b = -(P * (P - 1) * (P - 2) * (P - 3) * (P - 4)) / 4
    rep = sl2_fibration(companion(0, sympy.expand(b)))
    assert rep.affine_branch_points == 5 and rep.branch_at_infinity and rep.genus == 2
