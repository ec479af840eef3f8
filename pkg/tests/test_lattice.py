import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from twistfold.lattice import (
    FiniteAbelianGroup,
    IntegerMatrix,
    LatticeAutomorphism,
    automorphism_invariants,
    cokernel,
    kernel_basis,
    smith_normal_form,
)

small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def diagonal(m: IntegerMatrix):
    r, c = m.shape
    return [m.entries[i][i] for i in range(min(r, c))]


def test_snf_examples():
    assert diagonal(smith_normal_form([[2]])[1]) == [2]
    assert diagonal(smith_normal_form([[2, 0], [0, 3]])[1]) == [1, 6]
    assert diagonal(smith_normal_form([[0, 0], [0, 0]])[1]) == [0, 0]


@settings(max_examples=200, deadline=None)
@given(small_matrices)
def test_snf_reconstructs_and_divides(rows):
    m = IntegerMatrix(rows)
    u, d, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert abs(u.det()) == 1 and abs(v.det()) == 1
    diag = diagonal(d)
    r, c = d.shape
    assert all(d.entries[i][j] == 0 for i in range(r) for j in range(c) if i != j)
    nz = [x for x in diag if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert diag[len(nz):] == [0] * (len(diag) - len(nz))


@settings(max_examples=100, deadline=None)
@given(small_matrices)
def test_snf_matches_sympy(rows):
    ours = [abs(x) for x in diagonal(smith_normal_form(rows)[1])]
    m = Matrix(rows)
    theirs = sympy_snf(m, domain=ZZ)
    theirs = [abs(int(theirs[i, i])) for i in range(min(m.shape))]
    assert sorted(ours) == sorted(theirs)


def brute_cokernel_order(rows, box=6):
    """Order of Z^n / image when finite, counted by reducing a box of points modulo the image lattice."""
    n = len(rows)
    m = IntegerMatrix(rows)
    u, d, _ = smith_normal_form(m)
    diag = diagonal(d)
    if len(diag) < n or 0 in diag:
        return None
    # classes of Z^n / image are detected by (U x) mod d_i
    seen = set()
    for x in itertools.product(range(box), repeat=n):
        ux = u.apply(x)
        seen.add(tuple(ux[i] % diag[i] for i in range(n)))
    return len(seen)


def test_cokernel_examples():
    assert cokernel([[2]]) == FiniteAbelianGroup.cyclic(2)
    assert cokernel([[0, 0], [0, 0]]).free_rank == 2
    swap = IntegerMatrix([[0, 1], [1, 0]])
    g = cokernel(IntegerMatrix.identity(2) - swap)
    assert g.free_rank == 1 and g.invariant_factors == ()
    assert cokernel(IntegerMatrix.identity(3)).is_trivial


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=2, max_size=2))
def test_cokernel_order_by_enumeration(rows):
    g = cokernel(rows)
    det = IntegerMatrix(rows).det()
    if det == 0:
        assert g.free_rank >= 1
        return
    assert g.order() == abs(det)
    assert brute_cokernel_order(rows, box=abs(det) + 1) == abs(det)


@settings(max_examples=100, deadline=None)
@given(small_matrices)
def test_kernel_basis_is_kernel(rows):
    m = IntegerMatrix(rows)
    basis = kernel_basis(m)
    for b in basis:
        assert all(x == 0 for x in m.apply(b))
    assert len(basis) == m.ncols - Matrix(rows).rank()


def test_automorphism_invariants_examples():
    fixed, co = automorphism_invariants(LatticeAutomorphism.of([[0, 1], [1, 0]]))
    assert [tuple(abs(x) for x in b) for b in fixed] == [(1, 1)]
    assert co.free_rank == 1 and not co.invariant_factors
    fixed, co = automorphism_invariants(LatticeAutomorphism.of([[1, 0], [0, 1]]))
    assert len(fixed) == 2 and co.free_rank == 2
    fixed, co = automorphism_invariants(LatticeAutomorphism.of([[-1]]))
    assert fixed == [] and co == FiniteAbelianGroup.cyclic(2)


def test_invalid_automorphism_rejected():
    with pytest.raises(ValueError):
        LatticeAutomorphism(IntegerMatrix([[2]]), 1)
    with pytest.raises(ValueError):
        LatticeAutomorphism.of([[1, 1], [0, 1]])


def test_finite_abelian_normalization():
    assert FiniteAbelianGroup.from_orders([2, 3]) == FiniteAbelianGroup.cyclic(6)
    assert FiniteAbelianGroup.from_orders([2, 2]).invariant_factors == (2, 2)
    assert FiniteAbelianGroup.from_orders([1, 0]).free_rank == 1
