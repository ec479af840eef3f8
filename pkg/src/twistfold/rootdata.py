"""Root data, Weyl groups, Cartan classification, Langlands duality and affine diagrams.

Cartan matrices follow the convention ``C[i][j] = <alpha_i, alpha_j^vee>``, so
``|C[i][j]| > 1`` means ``alpha_i`` is longer than ``alpha_j``. Simple roots are
numbered as in Bourbaki: ``B_n`` ends with a short root, ``C_n`` with a long one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial, prod
from typing import Sequence

from ._closure import perm_closure
from .config import DEFAULTS, bound
from .lattice import (
    FiniteAbelianGroup,
    IntegerMatrix,
    Row,
    cokernel,
    coordinates,
    row_lattice_basis,
)

WEYL_CAP = DEFAULTS["TWISTFOLD_WEYL_CAP"]
CLASSIFY_BOUND = 12


def pair(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


def _add(x, y, c=1):
    return tuple(a + c * b for a, b in zip(x, y))


class RootDataError(ValueError):
    pass


# ---------------------------------------------------------------- Cartan catalog


def cartan_matrix(letter: str, n: int) -> list[list[int]]:
    """Finite-type Cartan matrix in Bourbaki numbering."""
    letter = letter.upper()
    if n < 1:
        raise RootDataError("rank must be positive")
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a_ij=-1, a_ji=-1):
        c[i][j], c[j][i] = a_ij, a_ji

    if letter == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif letter == "B":
        if n < 2:
            raise RootDataError("B_n needs n >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)  # alpha_{n-1} long, alpha_n short
    elif letter == "C":
        if n < 2:
            raise RootDataError("C_n needs n >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)
    elif letter == "D":
        if n < 2:
            raise RootDataError("D_n needs n >= 2")
        for i in range(n - 3):
            link(i, i + 1)
        if n >= 3:
            link(n - 3, n - 2)
            link(n - 3, n - 1)
    elif letter == "E":
        if n not in (6, 7, 8):
            raise RootDataError("E_n needs n in 6..8")
        link(0, 2)
        link(1, 3)
        link(2, 3)
        for i in range(3, n - 1):
            link(i, i + 1)
    elif letter == "F":
        if n != 4:
            raise RootDataError("F_n needs n = 4")
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif letter == "G":
        if n != 2:
            raise RootDataError("G_n needs n = 2")
        link(0, 1, -1, -3)  # alpha_1 short, alpha_2 long
    else:
        raise RootDataError(f"unknown type {letter!r}")
    return c


WEYL_ORDERS = {
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "F4": 1152,
    "G2": 12,
}


def weyl_order_formula(letter: str, n: int) -> int:
    key = f"{letter}{n}"
    if key in WEYL_ORDERS:
        return WEYL_ORDERS[key]
    if letter == "A":
        return factorial(n + 1)
    if letter in "BC":
        return 2**n * factorial(n)
    if letter == "D":
        return 2 ** (n - 1) * factorial(n)
    raise RootDataError(f"no order formula for {key}")


# ---------------------------------------------------------------- root datum


@dataclass(frozen=True)
class RootDatum:
    """Character lattice ``Z^n`` with roots, cocharacter lattice ``Z^n`` with coroots.

    ``roots[k]`` and ``coroots[k]`` are paired. The first ``semisimple_rank``
    entries are the simple roots of the chosen base, then the remaining positive
    roots, then the negatives in the same order.
    """

    rank: int
    roots: tuple[Row, ...]
    coroots: tuple[Row, ...]
    label: str | None = None
    cartan_type: tuple[tuple[str, int], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.roots) != len(self.coroots):
            raise RootDataError("roots and coroots must be paired")
        for a, av in zip(self.roots, self.coroots):
            if len(a) != self.rank or len(av) != self.rank:
                raise RootDataError("vector of wrong length")
            if pair(a, av) != 2:
                raise RootDataError(f"<alpha, alpha^vee> != 2 for {a}, {av}")

    # -- construction from simple roots -----------------------------------

    @classmethod
    def from_simple(
        cls,
        rank: int,
        simple_roots: Sequence[Sequence[int]],
        simple_coroots: Sequence[Sequence[int]],
        label: str | None = None,
    ) -> "RootDatum":
        """Generate all roots by reflecting the simple ones."""
        sr = [tuple(a) for a in simple_roots]
        sc = [tuple(a) for a in simple_coroots]
        ell = len(sr)
        cart = [[pair(sr[i], sc[j]) for j in range(ell)] for i in range(ell)]

        def coeffs_step(coef, i):
            # s_i acting on simple-root coordinates
            x = sum(coef[j] * cart[j][i] for j in range(ell))
            out = list(coef)
            out[i] -= x
            return tuple(out)

        simple_coefs = [tuple(int(i == j) for j in range(ell)) for i in range(ell)]
        found = {c: None for c in simple_coefs}
        frontier = list(simple_coefs)
        while frontier:
            nxt = []
            for c in frontier:
                for i in range(ell):
                    d = coeffs_step(c, i)
                    if d not in found and all(v >= 0 for v in d):
                        found[d] = None
                        nxt.append(d)
            frontier = nxt
        if len(found) > 5000:
            raise RootDataError("root system not of finite type")
        positives = sorted(found, key=lambda c: (sum(c), tuple(-v for v in c)))
        # coroot of a positive root: follow a reflection path from a simple root
        coroot_of: dict[tuple, Row] = {c: sc[c.index(1)] for c in simple_coefs}
        root_of: dict[tuple, Row] = {c: sr[c.index(1)] for c in simple_coefs}
        pending = [c for c in positives if c not in coroot_of]
        while pending:
            rest = []
            for c in pending:
                for i in range(ell):
                    d = coeffs_step(c, i)
                    if d in coroot_of:
                        # c = s_i(d), so c^vee = s_i(d^vee)
                        dv, dr = coroot_of[d], root_of[d]
                        coroot_of[c] = _add(dv, sc[i], -pair(sr[i], dv))
                        root_of[c] = _add(dr, sr[i], -pair(dr, sc[i]))
                        break
                else:
                    rest.append(c)
            if len(rest) == len(pending):
                raise RootDataError("could not reach every root from a simple root")
            pending = rest
        pos_r = [root_of[c] for c in positives]
        pos_c = [coroot_of[c] for c in positives]
        roots = tuple(pos_r + [tuple(-v for v in a) for a in pos_r])
        coroots = tuple(pos_c + [tuple(-v for v in a) for a in pos_c])
        try:
            ctype = tuple(classify_cartan(cart, bound=max(CLASSIFY_BOUND, ell))) if ell else ()
        except RootDataError:
            ctype = ()
        return cls(rank, roots, coroots, label, ctype)

    # -- basic structure ---------------------------------------------------

    @cached_property
    def num_positive(self) -> int:
        return len(self.roots) // 2

    @cached_property
    def semisimple_rank(self) -> int:
        return len(row_lattice_basis(self.roots, self.rank)) if self.roots else 0

    @property
    def simple_roots(self) -> tuple[Row, ...]:
        return self.roots[: self.semisimple_rank]

    @property
    def simple_coroots(self) -> tuple[Row, ...]:
        return self.coroots[: self.semisimple_rank]

    @cached_property
    def cartan(self) -> list[list[int]]:
        s, sv = self.simple_roots, self.simple_coroots
        return [[pair(s[i], sv[j]) for j in range(len(s))] for i in range(len(s))]

    @cached_property
    def root_index(self) -> dict[Row, int]:
        return {a: k for k, a in enumerate(self.roots)}

    def coroot_of(self, alpha: Sequence[int]) -> Row:
        return self.coroots[self.root_index[tuple(alpha)]]

    def reflect(self, k: int, x: Sequence[int]) -> Row:
        """``s_alpha(x) = x - <x, alpha^vee> alpha`` for the k-th root."""
        return _add(x, self.roots[k], -pair(x, self.coroots[k]))

    def reflect_co(self, k: int, y: Sequence[int]) -> Row:
        return _add(y, self.coroots[k], -pair(self.roots[k], y))

    def reflection_matrix(self, k: int) -> IntegerMatrix:
        """Matrix of ``s_alpha`` on column vectors of the character lattice."""
        cols = [self.reflect(k, e) for e in _unit_vectors(self.rank)]
        return IntegerMatrix(cols, self.rank).T

    def type_label(self) -> str:
        return type_string(self.cartan_type) if self.cartan_type else ""

    @cached_property
    def fundamental_group(self) -> FiniteAbelianGroup:
        """``X_* / Z Phi^vee``, the fundamental group of the derived group (torsion part)."""
        return cokernel(IntegerMatrix(self.coroots, self.rank).T) if self.roots else FiniteAbelianGroup(
            (), self.rank
        )

    @cached_property
    def center_group(self) -> FiniteAbelianGroup:
        """``X / Z Phi``: character group of the centre."""
        return cokernel(IntegerMatrix(self.roots, self.rank).T) if self.roots else FiniteAbelianGroup(
            (), self.rank
        )

    @property
    def is_semisimple(self) -> bool:
        return self.semisimple_rank == self.rank

    @property
    def is_simply_connected(self) -> bool:
        return self.is_semisimple and self.fundamental_group.is_trivial

    @property
    def is_adjoint(self) -> bool:
        return self.is_semisimple and self.center_group.is_trivial

    def isogeny(self) -> str:
        if self.is_simply_connected:
            return "sc"
        if self.is_adjoint:
            return "adjoint"
        return "intermediate"

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "roots": [list(a) for a in self.roots],
            "coroots": [list(a) for a in self.coroots],
            "label": self.label,
        }

    @classmethod
    def from_json(cls, data: dict) -> "RootDatum":
        rd = cls(
            data["rank"],
            tuple(tuple(a) for a in data["roots"]),
            tuple(tuple(a) for a in data["coroots"]),
            data.get("label"),
        )
        return rd.with_base()

    def with_base(self) -> "RootDatum":
        """Re-derive an ordered base (simple roots first) from the root set."""
        if not self.roots:
            return self
        simple = choose_base(self.roots)
        rd = RootDatum.from_simple(
            self.rank, simple, [self.coroot_of(a) for a in simple], self.label
        )
        if set(rd.roots) != set(self.roots):
            raise RootDataError("root set is not closed under reflections")
        return rd

    def same_datum(self, other: "RootDatum") -> bool:
        """Equality of the paired root/coroot sets, ignoring order and label."""
        return self.rank == other.rank and set(zip(self.roots, self.coroots)) == set(
            zip(other.roots, other.coroots)
        )


def _unit_vectors(n: int) -> list[Row]:
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def choose_base(roots: Sequence[Sequence[int]]) -> list[Row]:
    """Simple roots for the positivity defined by a generic integral functional.

    The functional is lexicographic (first nonzero coordinate decides), and the
    returned base is sorted to put connected diagram neighbours close together.
    """
    roots = [tuple(a) for a in roots]
    positive = [a for a in roots if next((v for v in a if v), 0) > 0]
    pset = set(positive)
    simple = [
        a for a in positive if not any(_add(a, b, -1) in pset for b in positive if b != a)
    ]
    return simple


def _order_base_bourbaki(rd: RootDatum) -> RootDatum:
    """Reorder simple roots to Bourbaki numbering when the datum is simple."""
    ctype, perm = classify_cartan_with_order(rd.cartan)
    if perm is None:
        return rd
    s, sv = rd.simple_roots, rd.simple_coroots
    return RootDatum.from_simple(rd.rank, [s[i] for i in perm], [sv[i] for i in perm], rd.label)


# ---------------------------------------------------------------- builders

_SC_NAMES = {"A": "SL_{n1}", "B": "Spin_{n2p1}", "C": "Sp_{n2}", "D": "Spin_{n2}"}
_AD_NAMES = {"A": "PGL_{n1}", "B": "SO_{n2p1}", "C": "PSp_{n2}", "D": "PSO_{n2}"}


def _group_name(table: dict, letter: str, n: int, suffix: str) -> str:
    if letter in table:
        return table[letter].format(n1=n + 1, n2p1=2 * n + 1, n2=2 * n)
    return f"{letter}{n}{suffix}"


def build_root_datum(letter: str, n: int, isogeny: str = "sc") -> RootDatum:
    """Root datum of a simple group.

    ``isogeny`` is ``"sc"``, ``"adjoint"`` or a named group:
    ``"SO"`` (``SO_{2n}`` for type D, ``SO_{2n+1}`` for type B), ``"PSO"`` (adjoint D),
    ``"PSp"`` (adjoint C).
    """
    letter = letter.upper()
    c = cartan_matrix(letter, n)
    iso = isogeny.lower() if isogeny.lower() in ("sc", "adjoint", "ad") else isogeny
    if iso in ("sc",):
        # X = weight lattice, basis of fundamental weights
        roots = [c[j] for j in range(n)]
        coroots = _unit_vectors(n)
        label = _group_name(_SC_NAMES, letter, n, "_sc")
        return RootDatum.from_simple(n, roots, coroots, label)
    if iso in ("adjoint", "ad"):
        roots = _unit_vectors(n)
        coroots = [tuple(c[j][i] for j in range(n)) for i in range(n)]
        label = _group_name(_AD_NAMES, letter, n, "_ad")
        return RootDatum.from_simple(n, roots, coroots, label)
    named = {
        ("D", "SO"): [_unit_vectors(n)[0]],  # Q + Z omega_1
        ("D", "PSO"): [],
        ("B", "SO"): [],
        ("C", "PSp"): [],
    }
    if (letter, iso) not in named:
        raise RootDataError(f"isogeny {isogeny!r} incompatible with type {letter}{n}")
    if letter == "D" and n < 2:
        raise RootDataError("D_n needs n >= 2")
    label = {"SO": f"SO_{2 * n + (letter == 'B')}", "PSO": f"PSO_{2 * n}", "PSp": f"PSp_{2 * n}"}[iso]
    return datum_with_weights(letter, n, named[(letter, iso)], label)


def datum_with_weights(letter: str, n: int, extra_weights, label=None) -> RootDatum:
    """Datum whose character lattice is ``Q + span(extra_weights)`` (weights in fundamental coordinates)."""
    c = cartan_matrix(letter, n)
    gens = [tuple(c[j]) for j in range(n)] + [tuple(w) for w in extra_weights]
    basis = row_lattice_basis(gens, n)
    roots = [coordinates(c[j], basis) for j in range(n)]
    coroots = [tuple(b[i] for b in basis) for i in range(n)]
    return RootDatum.from_simple(n, roots, coroots, label)


def product_datum(*parts: RootDatum, label: str | None = None) -> RootDatum:
    """Direct product of root data."""
    rank = sum(p.rank for p in parts)
    simple, cosimple = [], []
    offset = 0
    for p in parts:
        for a, av in zip(p.simple_roots, p.simple_coroots):
            simple.append((0,) * offset + a + (0,) * (rank - offset - p.rank))
            cosimple.append((0,) * offset + av + (0,) * (rank - offset - p.rank))
        offset += p.rank
    lab = label or " x ".join(p.label or "?" for p in parts)
    return RootDatum.from_simple(rank, simple, cosimple, lab)


def langlands_dual(rd: RootDatum) -> RootDatum:
    """Swap characters with cocharacters and roots with coroots."""
    label = _dual_label(rd.label)
    return RootDatum.from_simple(rd.rank, rd.simple_coroots, rd.simple_roots, label)


def _dual_label(label: str | None) -> str | None:
    if not label:
        return label
    import re

    m = re.fullmatch(r"([A-Za-z]+)_\{?(\d+)\}?", label)
    if not m:
        if label.endswith("_sc"):
            return label[:-3] + "_ad"
        if label.endswith("_ad"):
            return label[:-3] + "_sc"
        return f"dual({label})"
    name, k = m.group(1), int(m.group(2))
    odd = k % 2 == 1
    table = {
        "SL": f"PGL_{k}",
        "PGL": f"SL_{k}",
        "Sp": f"SO_{k + 1}",
        "PSp": f"Spin_{k + 1}",
        "SO": f"Sp_{k - 1}" if odd else f"SO_{k}",
        "Spin": f"PSp_{k - 1}" if odd else f"PSO_{k}",
        "PSO": f"Spin_{k}",
    }
    return table.get(name, f"dual({label})")


# ---------------------------------------------------------------- Weyl group


@dataclass(frozen=True)
class WeylGroup:
    """Weyl group as permutations of ``rd.roots``; matrices on X as witnesses."""

    datum: RootDatum
    generators: tuple[tuple[int, ...], ...]
    elements: tuple[tuple[int, ...], ...]
    parent: tuple[int, ...]
    via: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def word(self, k: int) -> list[int]:
        """Simple-reflection indices whose product (left to right) is element ``k``."""
        out = []
        while self.parent[k] >= 0:
            out.append(self.via[k])
            k = self.parent[k]
        return out[::-1]

    def generator_matrices(self) -> list[IntegerMatrix]:
        return [self.datum.reflection_matrix(i) for i in range(len(self.generators))]

    def matrix(self, k: int) -> IntegerMatrix:
        mats = self.generator_matrices()
        m = IntegerMatrix.identity(self.datum.rank)
        for i in self.word(k):
            m = m @ mats[i]
        return m

    def act(self, k: int, x: Sequence[int]) -> Row:
        """Apply element ``k`` to a character."""
        for i in reversed(self.word(k)):
            x = self.datum.reflect(i, x)
        return tuple(x)


def simple_reflection_permutations(rd: RootDatum) -> list[tuple[int, ...]]:
    idx = rd.root_index
    return [
        tuple(idx[rd.reflect(i, a)] for a in rd.roots) for i in range(rd.semisimple_rank)
    ]


def weyl_group(rd: RootDatum, cap: int | None = None) -> WeylGroup:
    """Enumerate ``W`` as the closure of simple reflections acting on roots."""
    cap = bound("TWISTFOLD_WEYL_CAP") if cap is None else cap
    gens = simple_reflection_permutations(rd)
    if rd.cartan_type:
        expected = prod(weyl_order_formula(l, n) for l, n in rd.cartan_type)
        if expected > cap:
            raise RootDataError(f"|W| = {expected} exceeds enumeration cap {cap}")
    try:
        elements, parent, via = perm_closure(gens, cap)
    except OverflowError as exc:
        raise RootDataError(str(exc)) from None
    return WeylGroup(rd, tuple(gens), tuple(elements), tuple(parent), tuple(via))


def check_weyl_generators(rd: RootDatum) -> bool:
    """Generator-level identities: involutions, braid relations and root-set preservation."""
    gens = simple_reflection_permutations(rd)
    n = len(rd.roots)
    ident = tuple(range(n))

    def compose(p, q):
        return tuple(p[x] for x in q)

    for g in gens:
        if compose(g, g) != ident:
            return False
    cart = rd.cartan
    mexp = {0: 2, 1: 3, 2: 4, 3: 6}
    for i, j in itertools.combinations(range(len(gens)), 2):
        m = mexp[cart[i][j] * cart[j][i]]
        p = ident
        gij = compose(gens[i], gens[j])
        for _ in range(m):
            p = compose(p, gij)
        if p != ident:
            return False
    roots = set(rd.roots)
    return all(rd.reflect(i, a) in roots for i in range(len(gens)) for a in rd.roots)


# ---------------------------------------------------------------- classification


def _components(c: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(c)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(n):
                if w not in seen and (c[v][w] or c[w][v]):
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _positive_definite_symmetrized(c: Sequence[Sequence[int]]) -> bool:
    n = len(c)
    lengths = _relative_lengths(c)
    if lengths is None:
        return False
    # symmetric matrix (alpha_i, alpha_j) = C[i][j] * |alpha_j|^2 / 2
    s = [[Fraction(c[i][j]) * lengths[j] / 2 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        if _det_frac([row[:k] for row in s[:k]]) <= 0:
            return False
    return True


def _det_frac(m):
    m = [list(r) for r in m]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            m[k], m[p] = m[p], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return det


def _relative_lengths(c) -> list[Fraction] | None:
    """Squared lengths with ``C[i][j] |alpha_j|^2 = C[j][i] |alpha_i|^2``, shortest 1 per component."""
    n = len(c)
    lengths: list[Fraction | None] = [None] * n
    for comp in _components(c):
        lengths[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            v = stack.pop()
            for w in comp:
                if w != v and c[v][w]:
                    if c[w][v] == 0:
                        return None
                    lw = lengths[v] * Fraction(c[w][v], c[v][w])
                    if lengths[w] is None:
                        lengths[w] = lw
                        stack.append(w)
                    elif lengths[w] != lw:
                        return None
        m = min(lengths[i] for i in comp)
        for i in comp:
            lengths[i] /= m
    return lengths  # type: ignore[return-value]


def classify_cartan_with_order(c, bound: int = CLASSIFY_BOUND):
    """Classify and, for a single component, return the Bourbaki ordering of nodes."""
    types = classify_cartan(c, bound)
    if len(types) != 1:
        return types, None
    letter, n = types[0]
    target = cartan_matrix(letter, n)
    perm = _find_isomorphism(target, c)
    return types, perm


def _find_isomorphism(target, c):
    """Permutation ``p`` with ``c[p[i]][p[j]] == target[i][j]``, by backtracking."""
    n = len(target)
    if len(c) != n:
        return None
    used = [False] * n
    perm: list[int] = []

    def rec(i):
        if i == n:
            return True
        for v in range(n):
            if used[v]:
                continue
            if all(c[perm[k]][v] == target[k][i] and c[v][perm[k]] == target[i][k] for k in range(i)):
                used[v] = True
                perm.append(v)
                if rec(i + 1):
                    return True
                perm.pop()
                used[v] = False
        return False

    return list(perm) if rec(0) else None


def classify_cartan(c: Sequence[Sequence[int]], bound: int = CLASSIFY_BOUND) -> list[tuple[str, int]]:
    """Multiset of simple types of a finite-type Cartan matrix, sorted.

    Rank-2 doubly-laced components are reported as ``C2`` when the long root
    comes last in the given order and ``B2`` otherwise.
    """
    c = [list(r) for r in c]
    n = len(c)
    if n > bound:
        raise RootDataError(f"rank {n} above classification bound {bound}")
    for i in range(n):
        if c[i][i] != 2:
            raise RootDataError("diagonal entries must be 2")
        for j in range(n):
            if i != j and (c[i][j] > 0 or (c[i][j] == 0) != (c[j][i] == 0)):
                raise RootDataError("not a generalized Cartan matrix")
    if not _positive_definite_symmetrized(c):
        raise RootDataError("Cartan matrix is not of finite type")
    out = []
    for comp in _components(c):
        sub = [[c[i][j] for j in comp] for i in comp]
        out.append(_classify_connected(sub))
    return sorted(out, key=lambda t: ("ABCDEFG".index(t[0]), t[1]))


def _classify_connected(c) -> tuple[str, int]:
    n = len(c)
    if n == 1:
        return ("A", 1)
    deg = [sum(1 for j in range(n) if j != i and c[i][j]) for i in range(n)]
    bonds = {
        (i, j): c[i][j] * c[j][i] for i in range(n) for j in range(i + 1, n) if c[i][j]
    }
    lengths = _relative_lengths(c)
    if 3 in bonds.values():
        return ("G", 2)
    if 2 in bonds.values():
        if n == 2:
            return ("C", 2) if lengths[1] > lengths[0] else ("B", 2)
        (i, j), = [k for k, v in bonds.items() if v == 2]
        if deg[i] == 2 and deg[j] == 2:
            return ("F", 4)
        end = i if deg[i] == 1 else j
        return ("B", n) if lengths[end] < max(lengths) else ("C", n)
    branch = [i for i in range(n) if deg[i] == 3]
    if not branch:
        return ("A", n)
    b = branch[0]
    arms = []
    for nb in (j for j in range(n) if j != b and c[b][j]):
        length, prev, cur = 1, b, nb
        while True:
            nxt = [k for k in range(n) if k not in (prev, cur) and c[cur][k]]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return ("E", n)
    raise RootDataError("unrecognized Dynkin diagram")


def type_string(types: Sequence[tuple[str, int]]) -> str:
    return "x".join(f"{l}{n}" for l, n in types) if types else "trivial"


def normalize_type(types: Sequence[tuple[str, int]]) -> list[tuple[str, int]]:
    """Canonical names for low-rank coincidences (``B1 = C1 = A1``, ``D2 = A1xA1``, ``D3 = A3``)."""
    out = []
    for l, n in types:
        if l in "BC" and n == 1:
            out.append(("A", 1))
        elif l == "D" and n == 2:
            out += [("A", 1), ("A", 1)]
        elif l == "D" and n == 3:
            out.append(("A", 3))
        else:
            out.append((l, n))
    return sorted(out, key=lambda t: ("ABCDEFG".index(t[0]), t[1]))


# ---------------------------------------------------------------- Killing form


def killing_form(rd: RootDatum) -> list[list[Fraction]]:
    """W-invariant form on ``X (x) Q``, scaled per simple factor so short roots have ``(a, a) = 2``."""
    if not rd.is_semisimple:
        raise RootDataError("killing_form needs a semisimple datum")
    n = rd.rank
    comps = _root_components(rd)
    total = [[Fraction(0)] * n for _ in range(n)]
    for comp in comps:
        g = [[Fraction(0)] * n for _ in range(n)]
        for k in comp:
            cv = rd.coroots[k]
            for i in range(n):
                if cv[i]:
                    for j in range(n):
                        g[i][j] += cv[i] * cv[j]
        sq = [_quad(g, rd.roots[k]) for k in comp]
        scale = Fraction(2) / min(sq)
        for i in range(n):
            for j in range(n):
                total[i][j] += scale * g[i][j]
    return total


def _quad(g, x, y=None):
    y = x if y is None else y
    return sum(x[i] * g[i][j] * y[j] for i in range(len(x)) for j in range(len(x)) if x[i] and y[j])


def bilinear(g, x, y) -> Fraction:
    return _quad(g, x, y)


def _root_components(rd: RootDatum) -> list[list[int]]:
    """Indices of roots grouped by simple factor."""
    comps = _components(rd.cartan)
    ell = rd.semisimple_rank
    out = []
    for comp in comps:
        members = []
        for k, a in enumerate(rd.roots):
            coef = coordinates(a, rd.simple_roots)
            if any(coef[i] for i in comp) and not any(coef[i] for i in range(ell) if i not in comp):
                members.append(k)
        out.append(members)
    return out


# ---------------------------------------------------------------- affine diagrams


@dataclass(frozen=True, order=True)
class AffineDiagramType:
    """Affine diagram ``X_N^{(r)}``."""

    letter: str
    n: int
    twist: int = 1

    def __post_init__(self):
        if (self.letter, self.n, self.twist) not in _valid_affine_keys(max(self.n, 2)):
            raise RootDataError(f"invalid affine type {self}")

    def __str__(self) -> str:
        return f"{self.letter}{self.n}^({self.twist})"

    @property
    def notation(self) -> str:
        return f"{self.letter}_{self.n}^({self.twist})"

    def gcm(self) -> list[list[int]]:
        return affine_cartan(self)


def _valid_affine_keys(max_n: int) -> set:
    keys = set()
    for n in range(1, max_n + 1):
        keys.add(("A", n, 1))
        if n >= 2:
            keys |= {("B", n, 1), ("C", n, 1)}
        if n >= 4:
            keys.add(("D", n, 1))
        if n >= 3:
            keys.add(("A", 2 * n - 1, 2))
        if n >= 1:
            keys.add(("A", 2 * n, 2))
        if n >= 2:
            keys.add(("D", n + 1, 2))
    keys |= {("E", 6, 1), ("E", 7, 1), ("E", 8, 1), ("F", 4, 1), ("G", 2, 1), ("E", 6, 2), ("D", 4, 3)}
    keys |= {("A", 3, 2)}
    return keys


def affine_catalog(max_rank: int) -> list[AffineDiagramType]:
    """Every affine type whose finite part has rank at most ``max_rank``."""
    out = []
    for letter, n, r in sorted(_valid_affine_keys(max(max_rank, 2) * 2 + 2)):
        d = AffineDiagramType(letter, n, r)
        if len(d.gcm()) - 1 <= max_rank:
            out.append(d)
    return sorted(set(out))


def _fixed_part(d: AffineDiagramType) -> tuple[str, int, str]:
    """Finite type of the horizontal subdiagram and which root extends it."""
    l, n, r = d.letter, d.n, d.twist
    if r == 1:
        return l, n, "highest"
    if l == "A" and n % 2 == 1:
        return "C", (n + 1) // 2, "highest_short"
    if l == "D" and r == 2:
        return "B", n - 1, "highest_short"
    if l == "E":
        return "F", 4, "highest_short"
    if l == "D" and r == 3:
        return "G", 2, "highest_short"
    if l == "A" and n % 2 == 0:
        return "C", n // 2, "half_highest_long"
    raise RootDataError(f"unsupported affine type {d}")


def affine_cartan(d: AffineDiagramType) -> list[list[int]]:
    return [list(r) for r in _affine_cartan_cached(d)]


@lru_cache(maxsize=None)
def _affine_cartan_cached(d: AffineDiagramType) -> tuple:
    """Generalized Cartan matrix ``a[i][j] = <alpha_j, alpha_i^vee>`` with node 0 the affine node.

    Built from the finite horizontal subsystem by adjoining minus an extremal root.
    """
    letter, n, mode = _fixed_part(d)
    if letter in "BC" and n == 1:
        letter = "A"
    rd = build_root_datum(letter, n, "adjoint")
    kf = killing_form(rd)
    pos = rd.roots[: rd.num_positive]
    height = lambda a: sum(a)  # adjoint coordinates are simple-root coordinates
    lens = [_quad(kf, a) for a in pos]
    if mode == "highest":
        ext = max(pos, key=height)
    elif mode == "highest_short":
        short = min(lens)
        ext = max((a for a, q in zip(pos, lens) if q == short), key=height)
    else:
        # BC_n: half of the highest (long) root of C_n
        top = max(pos, key=height)
        ext = tuple(Fraction(v, 2) for v in top)
    alpha0 = tuple(-v for v in ext)
    simple = list(rd.simple_roots)
    nodes = [alpha0] + simple

    def coroot_pair(x, a):
        # <x, a^vee> = 2 (x, a) / (a, a)
        return Fraction(2) * _quad(kf, x, a) / _quad(kf, a)

    size = len(nodes)
    out = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            v = coroot_pair(nodes[j], nodes[i])
            if v.denominator != 1:
                raise RootDataError("non-integral affine Cartan entry")
            out[i][j] = int(v)
    return tuple(tuple(r) for r in out)


def _gcm_isomorphic(a, b) -> bool:
    return _find_isomorphism(a, b) is not None


def identify_affine(gcm, max_rank: int | None = None) -> AffineDiagramType:
    """Find the catalog type whose GCM is isomorphic to ``gcm``."""
    n = len(gcm) - 1
    for d in affine_catalog(max_rank or max(n, 2)):
        g = d.gcm()
        if len(g) == len(gcm) and _gcm_isomorphic(g, gcm):
            return d
    raise RootDataError("not an affine GCM in the catalog")


def _dual_label_affine(d: AffineDiagramType) -> AffineDiagramType:
    l, n, r = d.letter, d.n, d.twist
    if r == 1 and l in "ADE":
        return d
    if (l, r) == ("A", 2) and n % 2 == 0:
        return d
    table = {
        ("B", 1): lambda: AffineDiagramType("A", 2 * n - 1, 2),
        ("C", 1): lambda: AffineDiagramType("D", n + 1, 2),
        ("F", 1): lambda: AffineDiagramType("E", 6, 2),
        ("G", 1): lambda: AffineDiagramType("D", 4, 3),
        ("A", 2): lambda: AffineDiagramType("B", (n + 1) // 2, 1),
        ("D", 2): lambda: AffineDiagramType("C", n - 1, 1),
        ("E", 2): lambda: AffineDiagramType("F", 4, 1),
        ("D", 3): lambda: AffineDiagramType("G", 2, 1),
    }
    return table[(l, r)]()


def dual_affine(d: AffineDiagramType) -> AffineDiagramType:
    """Dual affine type: the diagram with every arrow reversed.

    The label comes from the standard duality list; the transposed GCM is
    checked to be isomorphic to the GCM of the returned type.
    """
    out = _dual_label_affine(d)
    gt = [list(r) for r in zip(*d.gcm())]
    if not _gcm_isomorphic(out.gcm(), gt):
        raise RootDataError(f"transposed GCM of {d} does not match {out}")
    return out


def affine_diagram(rd: RootDatum, theta=None) -> AffineDiagramType:
    """Affine type attached to a simply-connected simple datum and a diagram automorphism."""
    types = normalize_type(classify_cartan(rd.cartan, bound=max(CLASSIFY_BOUND, rd.semisimple_rank)))
    if len(types) != 1:
        raise RootDataError("affine_diagram needs a simple datum")
    letter, n = types[0]
    order = 1 if theta is None else theta.order
    if order == 1:
        return AffineDiagramType(letter, n, 1)
    if letter == "A" and order == 2 and n >= 2:
        return AffineDiagramType("A", n, 2)
    if letter == "D" and order == 2:
        return AffineDiagramType("D", n, 2)
    if letter == "E" and n == 6 and order == 2:
        return AffineDiagramType("E", 6, 2)
    if letter == "D" and n == 4 and order == 3:
        return AffineDiagramType("D", 4, 3)
    raise RootDataError(f"unsupported pair {letter}{n} with automorphism of order {order}")
