from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistfold.centralizers import (
    A2L_VARIANTS,
    BranchDatum,
    a2l2_fibre_model,
    a2l2_model,
    centralizer_model,
    coinvariant_component,
    component_sheaves,
    discriminant_eval,
    dual_subgroup_model,
    epsilon,
    epsilon_consistent,
    norm_lattice_map,
    starred_profile_matches,
    table3,
    torus_fixed_components,
    total_group,
    variant_of,
)
from twistfold.lattice import FiniteAbelianGroup
from twistfold.rootdata import build_root_datum, langlands_dual, weyl_group

Z2 = FiniteAbelianGroup.cyclic(2)
TRIVIAL = FiniteAbelianGroup()

TYPES_UP_TO_6 = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 7)] + [("C", n) for n in range(2, 7)]
TYPES_UP_TO_6 += [("D", n) for n in range(4, 7)] + [("G", 2), ("F", 4), ("E", 6)]


def test_epsilon_examples():
    sl2 = build_root_datum("A", 1, "sc")
    e = epsilon(sl2, sl2.roots[0])
    assert (e.eps_alpha, e.eps_alpha_check) == (2, 1)
    sp4 = build_root_datum("C", 2, "sc")
    long_roots = [a for a in sp4.roots if epsilon(sp4, a).eps_alpha == 2]
    assert len(long_roots) == 4
    assert all((epsilon(sp4, a).eps_alpha, epsilon(sp4, a).eps_alpha_check) == (2, 1) for a in long_roots)
    so5 = build_root_datum("B", 2, "adjoint")
    short = [a for a in so5.roots if epsilon(so5, a).eps_alpha_check == 2]
    assert all(epsilon(so5, a).eps_alpha == 1 for a in short) and len(short) == 4


def test_torus_components_examples():
    sl2 = build_root_datum("A", 1, "sc")
    pgl2 = build_root_datum("A", 1, "adjoint")
    tc = torus_fixed_components(sl2, sl2.roots[0])
    assert (tc.kernel_of_root, tc.reflection_fixed, tc.quotient) == (Z2, Z2, TRIVIAL)
    tc = torus_fixed_components(pgl2, pgl2.roots[0])
    assert (tc.kernel_of_root, tc.reflection_fixed, tc.quotient) == (TRIVIAL, Z2, Z2)
    spin8 = build_root_datum("D", 4, "sc")
    for a in spin8.roots:
        tc = torus_fixed_components(spin8, a)
        assert tc.kernel_of_root.is_trivial and tc.reflection_fixed.is_trivial


@pytest.mark.parametrize("letter,n", TYPES_UP_TO_6)
@pytest.mark.parametrize("iso", ["sc", "adjoint"])
def test_epsilon_three_way_and_duality(letter, n, iso):
    rd = build_root_datum(letter, n, iso)
    dual = langlands_dual(rd)
    for k, a in enumerate(rd.roots):
        assert epsilon_consistent(rd, a)
        e, ed = epsilon(rd, a), epsilon(dual, rd.coroots[k])
        assert (ed.eps_alpha, ed.eps_alpha_check) == (e.eps_alpha_check, e.eps_alpha)


def test_component_sheaves_examples():
    sl2 = build_root_datum("A", 1, "sc")
    pgl2 = build_root_datum("A", 1, "adjoint")
    four = lambda rd: BranchDatum.of({f"b{i}": rd.roots[0] for i in range(4)})
    parts = component_sheaves(sl2, four(sl2))
    assert total_group([p.J_over_J0 for p in parts]) == FiniteAbelianGroup((2, 2, 2, 2))
    assert total_group([p.J1_over_J for p in parts]).is_trivial
    parts = component_sheaves(pgl2, four(pgl2))
    assert total_group([p.J_over_J0 for p in parts]).is_trivial
    assert total_group([p.J1_over_J for p in parts]) == FiniteAbelianGroup((2, 2, 2, 2))
    e6 = build_root_datum("E", 6, "sc")
    for p in component_sheaves(e6, BranchDatum.of({"b": e6.roots[0], "c": e6.roots[5]})):
        assert p.J1_over_J0.is_trivial


def test_dual_subgroup_examples():
    sl2 = build_root_datum("A", 1, "sc")
    branch = BranchDatum.of({"b0": sl2.roots[0], "b1": sl2.roots[0]})
    dual = dual_subgroup_model(centralizer_model(sl2, branch, "J1"))
    assert dual.choice == (1, 1)
    dual = dual_subgroup_model(centralizer_model(sl2, branch, "J0"))
    assert dual.choice == dual.full
    assert variant_of(dual_subgroup_model(a2l2_model(1, "J-"))) == "J+"


@pytest.mark.parametrize("variant", A2L_VARIANTS)
def test_dual_subgroup_involutive(variant):
    m = a2l2_model(1, variant)
    assert dual_subgroup_model(dual_subgroup_model(m)).choice == m.choice


def test_a2l2_fibres():
    f = a2l2_fibre_model(1, [0], "J1")
    assert (f.torus_rank, f.unipotent_rank, f.components) == (1, 0, TRIVIAL)
    f = a2l2_fibre_model(1, [2], "J1")
    assert (f.unipotent_rank, f.components) == (1, Z2)
    assert a2l2_fibre_model(1, [-2], "J-").components.is_trivial
    assert a2l2_fibre_model(1, [2], "J-").components == Z2
    with pytest.raises(ValueError):
        a2l2_fibre_model(1, [0], "J7")


@pytest.mark.parametrize("n", range(2, 7))
def test_coinvariant_sl_n(n):
    rd = build_root_datum("A", n - 1, "sc")
    g = coinvariant_component(rd)
    assert g == FiniteAbelianGroup.cyclic(n) == rd.center_group


def test_coinvariant_exceptional():
    assert coinvariant_component(build_root_datum("E", 8, "sc")).is_trivial
    spin8 = build_root_datum("D", 4, "sc")
    assert coinvariant_component(spin8) == FiniteAbelianGroup((2, 2)) == spin8.center_group


def brute_norm(rd, lam):
    w = weyl_group(rd)
    out = [0] * rd.rank
    for k in range(w.order):
        out = [a + b for a, b in zip(out, w.act(k, lam))]
    return tuple(out)


@pytest.mark.parametrize("letter,n", [("A", 1), ("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_norm_map_vanishes_on_semisimple(letter, n):
    rd = build_root_datum(letter, n, "sc")
    nm = norm_lattice_map(rd)
    for e in range(n):
        unit = tuple(int(i == e) for i in range(n))
        assert nm.apply(unit) == brute_norm(rd, unit) == (0,) * n


def test_discriminant_examples():
    pgl2 = build_root_datum("A", 1, "adjoint")
    assert discriminant_eval(pgl2, [Fraction(1)]) == 0
    # (1 - 2)(1 - 1/2)
    assert discriminant_eval(pgl2, [Fraction(2)]) == Fraction(-1, 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.integers(1, 9), st.integers(1, 9), st.integers(1, 9))
def test_discriminant_matches_root_product(a, b, c, d):
    rd = build_root_datum("A", 2, "adjoint")
    t = [Fraction(a, b), Fraction(c, d)]
    direct = Fraction(1)
    for root in rd.roots:
        val = Fraction(1)
        for x, k in zip(t, root):
            val *= x**k
        direct *= 1 - val
    assert discriminant_eval(rd, t) == direct


def test_table3_profiles():
    rows = table3(4)
    assert all(r.J_matches and r.dual_matches for r in rows)
    starred = [r for r in rows if r.starred]
    assert {r.pair for r in starred} == {"(SL_3, SL_3theta)", "(SL_5, SL_5theta)", "(SL_7, SL_7theta)", "(SL_9, SL_9theta)"}


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_starred_rows_match_no_standard_scheme(ell):
    assert starred_profile_matches(ell) == []
