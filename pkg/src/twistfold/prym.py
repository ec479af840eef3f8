"""Sign-vector groups on an even branch set and the order bookkeeping for the
polarizations of the associated Prym-type varieties."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import sympy

from .lattice import FiniteAbelianGroup

ENUMERATION_K = 4
FORMULA_K = 8

J = sympy.Symbol("J", positive=True)


class PrymError(ValueError):
    pass


def branch_set(k: int) -> tuple[int, ...]:
    if k < 0:
        raise PrymError("k must be non-negative")
    return tuple(range(2 * k))


def sign_vectors(points: Sequence[int]) -> Iterable[tuple[int, ...]]:
    return itertools.product((1, -1), repeat=len(points))


def _product(m: Sequence[int]) -> int:
    out = 1
    for x in m:
        out *= x
    return out


def _canonical(m: tuple[int, ...]) -> tuple[int, ...]:
    """Representative of ``{m, -m}`` whose first entry is ``+1``."""
    return m if not m or m[0] == 1 else tuple(-x for x in m)


@dataclass(frozen=True)
class CokerIota:
    k: int
    group: FiniteAbelianGroup
    representatives: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return self.group.order()


def coker_iota_order_formula(k: int) -> int:
    return 1 if k == 0 else 2 ** (2 * k - 2)


def coker_iota(k: int, enumerate_up_to: int = ENUMERATION_K) -> CokerIota:
    """``{m in mu_2^B : prod m = 1} / (m ~ -m)`` for ``|B| = 2k``."""
    pts = branch_set(k)
    if k == 0:
        return CokerIota(0, FiniteAbelianGroup.trivial(), ((),))
    if k <= enumerate_up_to:
        reps = sorted({_canonical(m) for m in sign_vectors(pts) if _product(m) == 1}, reverse=True)
        n = len(reps)
        if n & (n - 1):
            raise PrymError("sign-vector quotient is not a 2-group")
        rank = n.bit_length() - 1
        return CokerIota(k, FiniteAbelianGroup((2,) * rank), tuple(reps))
    if k > FORMULA_K:
        raise PrymError(f"k = {k} is beyond the supported range {FORMULA_K}")
    return CokerIota(k, FiniteAbelianGroup((2,) * (2 * k - 2)), ())


def _validate_subset(k: int, a: Iterable[int]) -> tuple[int, ...]:
    pts = branch_set(k)
    a = tuple(sorted(set(a)))
    if not a or len(a) == len(pts):
        raise PrymError("A must be a proper non-empty subset of the branch set")
    if any(x not in pts for x in a):
        raise PrymError("A must lie in the branch set")
    return a


@dataclass(frozen=True)
class SubsetOrders:
    k: int
    A: tuple[int, ...]
    signs_on_A_mod_pm: int
    kernel_of_product_on_complement: int
    ker_u_A: sympy.Expr
    p1_two_torsion: sympy.Expr
    p1_from_coker: sympy.Expr

    @property
    def consistent(self) -> bool:
        return sympy.simplify(self.p1_two_torsion - self.p1_from_coker) == 0 and sympy.simplify(
            self.ker_u_A - J * self.kernel_of_product_on_complement
        ) == 0

    def to_json(self) -> dict:
        return {
            "H0(A)/mu2": self.signs_on_A_mod_pm,
            "ker(H0(B-A)->mu2)": self.kernel_of_product_on_complement,
            "ker_u_A": str(self.ker_u_A),
            "P1[2]": str(self.p1_two_torsion),
            "P1[2]/J via coker": str(self.p1_from_coker / J),
        }


def subset_groups(k: int, a: Iterable[int]) -> SubsetOrders:
    """Orders in the two short exact sequences attached to ``A``, with ``J`` formal."""
    a = _validate_subset(k, a)
    rest = tuple(x for x in branch_set(k) if x not in a)
    on_a = len({_canonical(m) for m in sign_vectors(a)})
    on_rest = sum(1 for m in sign_vectors(rest) if _product(m) == 1)
    ker_u = J * on_rest
    p1 = ker_u * on_a
    return SubsetOrders(k, a, on_a, on_rest, ker_u, p1, J * coker_iota_order_formula(k))


@dataclass(frozen=True)
class ComponentModel:
    """Per-point component orders ``|J_S / J^0|`` of the group scheme ``J_S``."""

    k: int
    connected_at: tuple[int, ...]

    def profile(self) -> dict[int, int]:
        return {b: 1 if b in self.connected_at else 2 for b in branch_set(self.k)}

    def quotient_of_full(self) -> dict[int, int]:
        """Per-point orders of ``J^1 / J_S``."""
        return {b: 2 // d for b, d in self.profile().items()}

    def order_over_connected(self) -> int:
        return _product(self.profile().values())

    def full_over_this(self) -> int:
        return _product(self.quotient_of_full().values())


def model(k: int, a: Iterable[int]) -> ComponentModel:
    return ComponentModel(k, _validate_subset(k, a))


def swap(m: ComponentModel) -> ComponentModel:
    return ComponentModel(m.k, tuple(b for b in branch_set(m.k) if b not in m.connected_at))


@dataclass(frozen=True)
class DualityCheck:
    k: int
    A: tuple[int, ...]
    full_over_JA: int
    JBA_over_connected: int
    profiles_match: bool
    involutive: bool

    @property
    def ok(self) -> bool:
        return self.profiles_match and self.involutive and self.full_over_JA == self.JBA_over_connected


def duality_swap(k: int, a: Iterable[int]) -> DualityCheck:
    """``J^1 / J_A`` against ``J_{B-A} / J^0`` point by point."""
    m = model(k, a)
    d = swap(m)
    return DualityCheck(
        k,
        m.connected_at,
        m.full_over_this(),
        d.order_over_connected(),
        m.quotient_of_full() == d.profile(),
        swap(d) == m,
    )


def self_dual_under_bijection(k: int, a: Iterable[int]) -> bool:
    """With ``|A| = k`` any bijection ``A -> B-A`` carries ``J_A`` data onto ``J_{B-A}`` data."""
    m = model(k, a)
    d = swap(m)
    if len(m.connected_at) != len(d.connected_at):
        return False
    bij = dict(zip(m.connected_at, d.connected_at))
    bij.update({v: u for u, v in bij.items()})
    return all(m.profile()[b] == d.profile()[bij[b]] for b in branch_set(k))


def polarization_criterion(k: int) -> bool:
    """Principal polarization iff the cokernel is trivial."""
    return coker_iota(k).group.is_trivial


def prym_report(k: int, a: Iterable[int] | None = None) -> dict:
    ci = coker_iota(k, enumerate_up_to=min(k, ENUMERATION_K))
    out = {"k": k, "A": None, "orders": {"coker_iota": ci.order}, "duality_ok": None, "pp": polarization_criterion(k)}
    if a is not None:
        so = subset_groups(k, a)
        dc = duality_swap(k, a)
        out["A"] = list(so.A)
        out["orders"].update(so.to_json())
        out["orders"]["J1/J_A"] = dc.full_over_JA
        out["orders"]["J_(B-A)/J0"] = dc.JBA_over_connected
        out["duality_ok"] = dc.ok and so.consistent
    return out
