"""Component groups of regular centralizers at branch points.

At a branch point labelled by a root ``alpha`` the fibres satisfy
``J^0 c J c J^1`` with ``J/J^0 = Z/eps``, ``J^1/J = Z/eps_check`` and
``J^1/J^0 = Z/(eps * eps_check)``. Any open-closed ``J'`` between ``J^0`` and
``J^1`` is recorded by ``d = |J'/J^0|``, a divisor of ``eps * eps_check``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .folding import (
    PinnedAutomorphism,
    a2l_cofold,
    a2l_fold,
    fold,
    group_name,
    standard_automorphism,
)
from .lattice import FiniteAbelianGroup, IntegerMatrix, Row, cokernel, coordinates, gcd_all, row_lattice_basis
from .rootdata import (
    RootDataError,
    RootDatum,
    build_root_datum,
    langlands_dual,
    normalize_type,
    pair,
    type_string,
    weyl_order_formula,
)

# ---------------------------------------------------------------- epsilon numbers


@dataclass(frozen=True)
class EpsilonPair:
    eps_alpha: int
    eps_alpha_check: int

    @property
    def product(self) -> int:
        return self.eps_alpha * self.eps_alpha_check


def _root_position(rd: RootDatum, alpha: Sequence[int]) -> int:
    try:
        return rd.root_index[tuple(alpha)]
    except KeyError:
        raise RootDataError(f"{tuple(alpha)} is not a root") from None


def epsilon(rd: RootDatum, alpha: Sequence[int]) -> EpsilonPair:
    """Positive generators of ``<alpha, X_*>`` and ``<alpha^vee, X^*>``.

    Both lattices are ``Z^n`` in the datum's coordinates, so each image is the
    ideal generated by the coordinates of the vector.
    """
    k = _root_position(rd, alpha)
    return EpsilonPair(gcd_all(rd.roots[k]), gcd_all(rd.coroots[k]))


@dataclass(frozen=True)
class TorusComponents:
    kernel_of_root: FiniteAbelianGroup  # pi_0(ker alpha)
    reflection_fixed: FiniteAbelianGroup  # pi_0(T^{s_alpha})
    quotient: FiniteAbelianGroup  # T^{s_alpha} / ker alpha


def torus_fixed_components(rd: RootDatum, alpha: Sequence[int]) -> TorusComponents:
    """Component groups read off from Smith forms of lattice maps.

    ``pi_0(ker alpha)`` is the torsion of ``X / Z alpha``; ``pi_0(T^{s_alpha})``
    the torsion of ``X / (1 - s_alpha) X``; the quotient ``T^{s_alpha}/ker alpha``
    is dual to the subgroup generated by ``alpha`` in ``X / (1 - s_alpha) X``.
    """
    k = _root_position(rd, alpha)
    n = rd.rank
    a = rd.roots[k]
    ker = cokernel(IntegerMatrix([a], n).T)
    one_minus_s = IntegerMatrix.identity(n) - rd.reflection_matrix(k)
    fixed = cokernel(one_minus_s)
    image = row_lattice_basis([one_minus_s.col(j) for j in range(n)], n)
    (gen,) = image
    (c,) = coordinates(gen, [a])
    return TorusComponents(
        FiniteAbelianGroup(ker.invariant_factors),
        FiniteAbelianGroup(fixed.invariant_factors),
        FiniteAbelianGroup.cyclic(abs(int(c))),
    )


def epsilon_consistent(rd: RootDatum, alpha: Sequence[int]) -> bool:
    """Cross-check the Smith-form groups against the epsilon numbers."""
    e = epsilon(rd, alpha)
    tc = torus_fixed_components(rd, alpha)
    return (
        tc.kernel_of_root == FiniteAbelianGroup.cyclic(e.eps_alpha)
        and tc.reflection_fixed == FiniteAbelianGroup.cyclic(e.product)
        and tc.quotient == FiniteAbelianGroup.cyclic(e.eps_alpha_check)
    )


# ---------------------------------------------------------------- branch data and models


@dataclass(frozen=True)
class BranchDatum:
    """Finitely many named points, each labelled by a positive root."""

    points: tuple[str, ...]
    labels: tuple[Row, ...]

    @classmethod
    def of(cls, mapping: Mapping[str, Sequence[int]] | Sequence[tuple[str, Sequence[int]]]):
        items = list(mapping.items()) if isinstance(mapping, Mapping) else list(mapping)
        return cls(tuple(p for p, _ in items), tuple(tuple(a) for _, a in items))

    def validate(self, rd: RootDatum, require_surjective: bool = False) -> None:
        positive = set(rd.roots[: rd.num_positive])
        for p, a in zip(self.points, self.labels):
            if a not in positive:
                raise RootDataError(f"label of {p} is not a positive root")
        if require_surjective and set(self.labels) != positive:
            raise RootDataError("branch labels do not cover every positive root")


@dataclass(frozen=True)
class PointComponents:
    point: str
    label_root: Row
    J_over_J0: FiniteAbelianGroup
    J1_over_J: FiniteAbelianGroup
    J1_over_J0: FiniteAbelianGroup

    def to_json(self) -> dict:
        return {
            "point": self.point,
            "label_root": list(self.label_root),
            "J_over_J0": str(self.J_over_J0),
            "J1_over_J": str(self.J1_over_J),
            "J1_over_J0": str(self.J1_over_J0),
        }


def component_sheaves(rd: RootDatum, branch: BranchDatum) -> list[PointComponents]:
    branch.validate(rd)
    out = []
    for p, a in zip(branch.points, branch.labels):
        e = epsilon(rd, a)
        out.append(
            PointComponents(
                p,
                a,
                FiniteAbelianGroup.cyclic(e.eps_alpha),
                FiniteAbelianGroup.cyclic(e.eps_alpha_check),
                FiniteAbelianGroup.cyclic(e.product),
            )
        )
    return out


def total_group(parts: Sequence[FiniteAbelianGroup]) -> FiniteAbelianGroup:
    out = FiniteAbelianGroup()
    for g in parts:
        out = out + g
    return out


CONNECTED, KERNEL, FULL = "J0", "J", "J1"


@dataclass(frozen=True)
class CentralizerModel:
    """Per-point choice of an open-closed subgroup between ``J^0`` and ``J^1``.

    ``choice[p]`` is ``d = |J'/J^0|`` at point ``p``; ``full[p]`` is ``|J^1/J^0|``.
    """

    datum: RootDatum | None
    branch: BranchDatum
    full: tuple[int, ...]
    choice: tuple[int, ...]
    kernel: tuple[int, ...] = field(default=())

    def __post_init__(self):
        for n, d in zip(self.full, self.choice):
            if n % d:
                raise ValueError(f"subgroup order {d} does not divide {n}")

    def profile(self) -> tuple[tuple[str, int, int], ...]:
        return tuple(zip(self.branch.points, self.full, self.choice))


def centralizer_model(rd: RootDatum, branch: BranchDatum, choice: str | Mapping[str, int] = KERNEL) -> CentralizerModel:
    """Model with every point set to ``J0``, ``J`` (root kernels), ``J1``, or explicit orders."""
    branch.validate(rd)
    eps = [epsilon(rd, a) for a in branch.labels]
    full = tuple(e.product for e in eps)
    kernel = tuple(e.eps_alpha for e in eps)
    if isinstance(choice, str):
        picks = {CONNECTED: (1,) * len(eps), KERNEL: kernel, FULL: full}[choice]
    else:
        picks = tuple(choice[p] for p in branch.points)
    return CentralizerModel(rd, branch, full, picks, kernel)


def dual_subgroup_model(m: CentralizerModel) -> CentralizerModel:
    """Match ``J^1/J'`` with ``Jv'/Jv^0``: the dual subgroup has order ``|J^1/J^0| / d``.

    Point labels move to the coroots of the Langlands dual datum.
    """
    dual_rd = langlands_dual(m.datum) if m.datum is not None else None
    labels = m.branch.labels
    if m.datum is not None:
        labels = tuple(m.datum.coroot_of(a) for a in labels)
    branch = BranchDatum(m.branch.points, labels)
    choice = tuple(n // d for n, d in zip(m.full, m.choice))
    kernel = ()
    if dual_rd is not None:
        kernel = tuple(epsilon(dual_rd, a).eps_alpha for a in labels)
    return CentralizerModel(dual_rd, branch, m.full, choice, kernel)


# ---------------------------------------------------------------- the A_{2l}^{(2)} fibres


@dataclass(frozen=True)
class FibreType:
    torus_rank: int
    unipotent_rank: int
    components: FiniteAbelianGroup

    def to_json(self) -> dict:
        return {
            "torus_rank": self.torus_rank,
            "unipotent_rank": self.unipotent_rank,
            "components": str(self.components),
        }


A2L_VARIANTS = ("J0", "J-", "J+", "J1")


def a2l2_components(variant: str, sign: int) -> int:
    """``|J'/J^0|`` over the hyperplane ``a_l = 2 * sign``."""
    if variant not in A2L_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "J0":
        return 1
    if variant == "J1":
        return 2
    # J- : one component over a = -2, two over a = +2; J+ mirrors it
    plus = variant == "J-"
    return 2 if (sign > 0) == plus else 1


def a2l2_fibre_model(ell: int, a: Sequence, variant: str) -> FibreType:
    """Fibre of ``J^0``, ``J_-``, ``J_+`` or ``J^1`` over ``a`` in the base of rank ``ell``."""
    if ell < 1:
        raise ValueError("ell must be positive")
    a = [a] if not isinstance(a, (list, tuple)) else list(a)
    if len(a) != ell:
        raise ValueError(f"base point needs {ell} coordinates")
    last = Fraction(a[-1]) if not isinstance(a[-1], complex) else a[-1]
    if variant not in A2L_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if last in (2, -2):
        d = a2l2_components(variant, 1 if last == 2 else -1)
        return FibreType(ell - 1, 1, FiniteAbelianGroup.cyclic(d))
    return FibreType(ell, 0, FiniteAbelianGroup())


def a2l2_model(ell: int, variant: str) -> CentralizerModel:
    """Two-point model over ``H_+`` and ``H_-`` with ``J^1/J^0 = Z/2`` at each."""
    branch = BranchDatum(("H+", "H-"), ((1,), (1,)))
    choice = (a2l2_components(variant, 1), a2l2_components(variant, -1))
    return CentralizerModel(None, branch, (2, 2), choice)


def variant_of(model: CentralizerModel) -> str:
    for v in A2L_VARIANTS:
        if a2l2_model(1, v).choice == model.choice:
            return v
    return "custom"


# ---------------------------------------------------------------- coinvariants, norm, discriminant


def coinvariant_component(rd: RootDatum) -> FiniteAbelianGroup:
    """``X / span{ s_alpha(lambda) - lambda }`` over all roots and a basis of ``X``."""
    n = rd.rank
    gens = []
    for k in range(rd.num_positive):
        for e in range(n):
            unit = tuple(int(i == e) for i in range(n))
            v = tuple(x - y for x, y in zip(rd.reflect(k, unit), unit))
            if any(v):
                gens.append(v)
    if not gens:
        return FiniteAbelianGroup((), n)
    return cokernel(IntegerMatrix(gens, n).T)


def weyl_orbit(rd: RootDatum, lam: Sequence[int]) -> list[Row]:
    """Orbit of a character under the Weyl group, by closing under simple reflections."""
    lam = tuple(lam)
    seen = {lam}
    frontier = [lam]
    ell = rd.semisimple_rank
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(ell):
                y = rd.reflect(i, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def weyl_group_order(rd: RootDatum) -> int:
    out = 1
    for letter, n in rd.cartan_type:
        out *= weyl_order_formula(letter, n)
    return out


def norm_lattice_map(rd: RootDatum) -> IntegerMatrix:
    """Matrix of ``lambda -> sum_w w(lambda)``, computed orbit by orbit.

    ``sum_w w(lambda) = |Stab(lambda)| * sum(orbit)`` with ``|Stab| = |W| / |orbit|``.
    """
    n = rd.rank
    order = weyl_group_order(rd)
    cols = []
    for e in range(n):
        unit = tuple(int(i == e) for i in range(n))
        orb = weyl_orbit(rd, unit)
        stab = order // len(orb)
        cols.append(tuple(stab * sum(v[i] for v in orb) for i in range(n)))
    return IntegerMatrix(cols, n).T


@dataclass(frozen=True)
class LaurentInvariant:
    """Finitely supported map from characters to exact rationals, i.e. a Laurent polynomial on the torus."""

    terms: tuple[tuple[Row, Fraction], ...]

    @classmethod
    def from_dict(cls, d: Mapping[Row, Fraction]) -> "LaurentInvariant":
        return cls(tuple(sorted((k, Fraction(v)) for k, v in d.items() if v)))

    def as_dict(self) -> dict[Row, Fraction]:
        return dict(self.terms)

    def __mul__(self, other: "LaurentInvariant") -> "LaurentInvariant":
        out: dict[Row, Fraction] = {}
        for k1, v1 in self.terms:
            for k2, v2 in other.terms:
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return LaurentInvariant.from_dict(out)

    def evaluate(self, t: Sequence) -> Fraction:
        total = 0
        for k, v in self.terms:
            total += v * character_value(k, t)
        return total

    def act(self, matrix: IntegerMatrix) -> "LaurentInvariant":
        """Transport along a lattice automorphism acting on characters."""
        return LaurentInvariant.from_dict({matrix.apply(k): v for k, v in self.terms})


def character_value(lam: Sequence[int], t: Sequence):
    """``lambda(t) = prod t_i^{lambda_i}``, with ``t_i`` the values on the basis characters."""
    out = Fraction(1)
    for e, x in zip(lam, t):
        if x == 0:
            raise ZeroDivisionError("torus coordinates must be nonzero")
        if e:
            out = out * (Fraction(x) ** e if not isinstance(x, complex) else x**e)
    return out


def discriminant_polynomial(rd: RootDatum) -> LaurentInvariant:
    """``prod_{alpha in Phi} (1 - e^alpha)`` as a Laurent polynomial."""
    zero = (0,) * rd.rank
    poly = LaurentInvariant.from_dict({zero: Fraction(1)})
    for a in rd.roots:
        poly = poly * LaurentInvariant.from_dict({zero: Fraction(1), a: Fraction(-1)})
    return poly


def two_rho(rd: RootDatum) -> Row:
    n = rd.rank
    return tuple(sum(a[i] for a in rd.roots[: rd.num_positive]) for i in range(n))


def discriminant_eval(
    rd: RootDatum,
    t: Sequence,
    twisted: bool = False,
    theta: PinnedAutomorphism | None = None,
    s: Sequence | None = None,
):
    """Evaluate ``prod_{alpha} (1 - alpha(t))``.

    With ``twisted=True`` the product runs over the cofolded roots of
    ``(rd, theta)`` and ``t`` lists values on the invariant-lattice basis. If
    ``s`` is given the extended version multiplies by ``2 rho(s)`` (the half-sum
    of positive roots of the relevant system, doubled).
    """
    if twisted:
        if theta is None:
            raise ValueError("twisted discriminant needs the automorphism")
        rd = fold(rd, theta).cofolded
    if len(t) != rd.rank:
        raise ValueError(f"torus point needs {rd.rank} coordinates")
    if any(x == 0 for x in t):
        raise ZeroDivisionError("torus coordinates must be nonzero")
    value = Fraction(1)
    for a in rd.roots:
        value *= 1 - character_value(a, t)
    if s is not None:
        value *= character_value(two_rho(rd), s)
    return value


def weyl_act_on_point(rd: RootDatum, k: int, t: Sequence) -> tuple:
    """Coordinates of ``s_k . t``: ``lambda(s.t) = (s^{-1} lambda)(t)`` for basis characters."""
    n = rd.rank
    out = []
    for e in range(n):
        unit = tuple(int(i == e) for i in range(n))
        out.append(character_value(rd.reflect(k, unit), t))
    return tuple(out)


# ---------------------------------------------------------------- Table 3 profiles


def jh_profile(h: RootDatum, choice: str = KERNEL) -> tuple:
    """Sorted multiset of ``(|J^1/J^0|, |J'/J^0|, long?)`` over positive roots of ``h``."""
    pos = h.roots[: h.num_positive]
    branch = BranchDatum(tuple(f"b{k}" for k in range(len(pos))), tuple(pos))
    m = centralizer_model(h, branch, choice)
    lengths = _root_lengths(h)
    return tuple(sorted((n, d, lengths[k]) for k, (n, d) in enumerate(zip(m.full, m.choice))))


def _root_lengths(rd: RootDatum) -> list[int]:
    """0 for short roots, 1 for long ones (everything short in simply-laced factors)."""
    from .rootdata import bilinear, killing_form

    kf = killing_form(rd)
    sq = [bilinear(kf, a, a) for a in rd.roots[: rd.num_positive]]
    return [int(q > 2) for q in sq]


def model_profile(m: CentralizerModel) -> tuple:
    lengths = _root_lengths(m.datum)
    idx = {a: k for k, a in enumerate(m.datum.roots[: m.datum.num_positive])}
    return tuple(
        sorted((n, d, lengths[idx[a]]) for a, n, d in zip(m.branch.labels, m.full, m.choice))
    )


def twisted_pair_model(rd: RootDatum, theta: PinnedAutomorphism) -> CentralizerModel:
    """Regular centralizer of twisted conjugation away from A_{2l}: the full ``J^1`` of the
    fixed torus with the folded Weyl group, one branch point per folded positive root."""
    folded = fold(rd, theta).folded
    pos = folded.roots[: folded.num_positive]
    branch = BranchDatum(tuple(f"b{k}" for k in range(len(pos))), tuple(pos))
    return centralizer_model(folded, branch, FULL)


@dataclass(frozen=True)
class Table3Row:
    pair: str
    type_of_J: str
    cameral: str
    type_of_dual_J: str
    dual_pair: str
    starred: bool
    J_matches: bool
    dual_matches: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _named(letter: str, n: int, iso: str) -> RootDatum:
    return build_root_datum(letter, n, iso)


def _untwisted_row(pair_name, rd, h_name, dual_rd, dual_name, dual_pair):
    branch_pos = rd.roots[: rd.num_positive]
    branch = BranchDatum(tuple(f"b{k}" for k in range(len(branch_pos))), tuple(branch_pos))
    m = centralizer_model(rd, branch, KERNEL)
    ok = model_profile(m) == jh_profile(rd, KERNEL)
    dual = dual_subgroup_model(m)
    dual_ok = model_profile(dual) == jh_profile(dual_rd, KERNEL)
    cam = type_string(normalize_type(rd.cartan_type))
    return Table3Row(pair_name, h_name, cam, dual_name, dual_pair, False, ok, dual_ok)


def _twisted_row(pair_name, rd, theta, h, dual_h, dual_pair):
    m = twisted_pair_model(rd, theta)
    ok = model_profile(m) == jh_profile(h, KERNEL)
    dual = dual_subgroup_model(m)
    dual_ok = model_profile(dual) == jh_profile(dual_h, KERNEL)
    cam = type_string(normalize_type(m.datum.cartan_type))
    cam_dual = type_string(normalize_type(dual.datum.cartan_type))
    if cam != cam_dual:
        cam = f"{cam}~{cam_dual}"
    return Table3Row(pair_name, group_name(h), cam, group_name(dual_h), dual_pair, False, ok, dual_ok)


def _classical_name(rd: RootDatum, ell: int, family: str) -> str:
    """``SO_{2l+1}`` / ``Sp_{2l}`` naming, also in rank one where the generic name is PGL_2 / SL_2."""
    name = group_name(rd)
    if ell == 1:
        return {"PGL_2": "SO_3", "SL_2": "Sp_2"}.get(name, name) if family in ("SO", "Sp") else name
    return name


def starred_profile_matches(ell: int) -> list[str]:
    """Names of every ``J_H`` (H an isogeny form of the folded or cofolded type, any of J0/J/J1)
    whose profile over ``H_+`` and ``H_-`` equals that of ``J_-``; empty means non-standard."""
    target = a2l2_model(ell, "J-")
    found = []
    candidates = []
    for letter in ("B", "C") if ell >= 2 else ("A",):
        for iso in ("sc", "adjoint"):
            candidates.append(build_root_datum(letter, ell, iso))
    for h in candidates:
        # H_+ and H_- both lie over the reflection hyperplane of the last simple root
        a = h.simple_roots[-1]
        e = epsilon(h, a)
        for choice, d in ((CONNECTED, 1), (KERNEL, e.eps_alpha), (FULL, e.product)):
            profile = ((e.product, d), (e.product, d))
            if profile == tuple(zip(target.full, target.choice)):
                found.append(f"{h.label}:{choice}")
    return found


def table3(max_rank: int = 4) -> list[Table3Row]:
    rows = []
    for r in range(2, max_rank + 2):
        rows.append(
            _untwisted_row(f"(SL_{r}, SL_{r})", _named("A", r - 1, "sc"), f"SL_{r}", _named("A", r - 1, "adjoint"), f"PGL_{r}", f"(PGL_{r}, SL_{r})")
        )
    for r in range(4, max(max_rank, 4) + 1):
        rows.append(
            _untwisted_row(f"(SO_{2 * r}, Spin_{2 * r})", _named("D", r, "SO"), f"SO_{2 * r}", langlands_dual(_named("D", r, "SO")), f"SO_{2 * r}", f"(SO_{2 * r}, Spin_{2 * r})")
        )
        rows.append(
            _untwisted_row(f"(Spin_{2 * r}, Spin_{2 * r})", _named("D", r, "sc"), f"Spin_{2 * r}", _named("D", r, "adjoint"), f"PSO_{2 * r}", f"(PSO_{2 * r}, Spin_{2 * r})")
        )
    for n in (6, 7, 8):
        e = _named("E", n, "sc")
        rows.append(_untwisted_row(f"(E{n}, E{n})", e, f"E{n}", _named("E", n, "adjoint"), f"E{n}", f"(E{n}, E{n})"))
    for ell in range(2, max_rank + 1):
        rd = _named("A", 2 * ell - 1, "sc")
        rows.append(
            _twisted_row(
                f"(SL_{2 * ell}, SL_{2 * ell}theta)",
                rd,
                standard_automorphism(rd, "flip"),
                _named("C", ell, "sc"),
                _named("B", ell, "adjoint"),
                f"(SO_{2 * ell + 1}, Spin_{2 * ell + 1})",
            )
        )
    for ell in range(2, max_rank + 1):
        rd = _named("D", ell + 1, "sc")
        from .folding import pinned_automorphism

        theta = standard_automorphism(rd, "flip") if ell >= 3 else pinned_automorphism(rd, [0, 2, 1])
        rows.append(
            _twisted_row(
                f"(Spin_{2 * ell + 2}, Spin_{2 * ell + 2}theta)",
                rd,
                theta,
                _named("B", ell, "sc"),
                _named("C", ell, "adjoint"),
                f"(PSp_{2 * ell}, Sp_{2 * ell})",
            )
        )
    rd = _named("E", 6, "sc")
    rows.append(_twisted_row("(E6, E6theta)", rd, standard_automorphism(rd, "flip"), _named("F", 4, "sc"), _named("F", 4, "adjoint"), "(F4, F4)"))
    rd = _named("D", 4, "sc")
    rows.append(
        _twisted_row("(Spin_8, Spin_8theta_3)", rd, standard_automorphism(rd, "triality"), _named("G", 2, "sc"), _named("G", 2, "adjoint"), "(G2, G2)")
    )
    for ell in range(1, max_rank + 1):
        inv = a2l_fold(ell)
        co = a2l_cofold(ell)
        j_minus = a2l2_model(ell, "J-")
        dual = dual_subgroup_model(j_minus)
        nonstandard = not starred_profile_matches(ell)
        dual_is_plus = variant_of(dual) == "J+"
        cam = type_string(normalize_type(co.cartan_type))
        rows.append(
            Table3Row(
                f"(SL_{2 * ell + 1}, SL_{2 * ell + 1}theta)",
                f"{_classical_name(inv, ell, 'SO')}(*)",
                cam if ell == 1 else f"{type_string(normalize_type(inv.cartan_type))}~{cam}",
                f"{_classical_name(co, ell, 'Sp')}(*)",
                f"(SL_{2 * ell + 1}, SL_{2 * ell + 1}vartheta)",
                True,
                nonstandard,
                dual_is_plus,
            )
        )
    return rows
