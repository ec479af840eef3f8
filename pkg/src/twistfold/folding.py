"""Diagram automorphisms and the folded / cofolded root data they produce.

For a simply-connected datum with a pinned automorphism ``theta`` of order ``m``:

* the folded datum has character lattice the coinvariants ``X_theta``, roots the
  images of roots, and coroots the orbit sums of coroots;
* the cofolded datum has character lattice the invariants ``X^theta``, roots the
  orbit sums ``beta_xi``, and coroots the images of coroots in ``X^vee_theta``.

Coinvariant lattices are given concrete coordinates by pairing against a basis
of the dual invariant lattice, so both data are ordinary :class:`RootDatum`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import (
    IntegerMatrix,
    LatticeAutomorphism,
    Row,
    coordinates,
    kernel_basis,
)
from .rootdata import (
    RootDataError,
    RootDatum,
    _find_isomorphism,
    _order_base_bourbaki,
    build_root_datum,
    classify_cartan,
    normalize_type,
    pair,
    product_datum,
    type_string,
)


class FoldingError(ValueError):
    pass


@dataclass(frozen=True)
class PinnedAutomorphism:
    """Diagram automorphism of a simply-connected datum acting on both lattices."""

    base: RootDatum
    permutation: tuple[int, ...]
    on_characters: LatticeAutomorphism
    on_cocharacters: LatticeAutomorphism

    @property
    def order(self) -> int:
        return self.on_characters.order

    def __call__(self, x: Sequence[int]) -> Row:
        return self.on_characters.matrix.apply(x)

    def co(self, y: Sequence[int]) -> Row:
        return self.on_cocharacters.matrix.apply(y)

    def inverse_matrix(self) -> IntegerMatrix:
        return self.on_characters.matrix ** (self.order - 1)

    def simple_orbits(self) -> list[list[int]]:
        """Orbits of simple-root indices, each sorted, ordered by lowest index."""
        seen, out = set(), []
        for i in range(len(self.permutation)):
            if i in seen:
                continue
            orb, j = [], i
            while j not in orb:
                orb.append(j)
                j = self.permutation[j]
            seen.update(orb)
            out.append(sorted(orb))
        return out

    @property
    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.permutation))


def pinned_automorphism(rd: RootDatum, permutation: Sequence[int]) -> PinnedAutomorphism:
    """Automorphism sending simple root ``i`` to simple root ``permutation[i]``.

    The datum must be simply connected, so simple coroots form a basis of the
    cocharacter lattice; the character action is the contragredient.
    """
    perm = tuple(permutation)
    ell = rd.semisimple_rank
    if sorted(perm) != list(range(ell)):
        raise FoldingError("not a permutation of the simple roots")
    cart = rd.cartan
    if any(cart[perm[i]][perm[j]] != cart[i][j] for i in range(ell) for j in range(ell)):
        raise FoldingError("permutation does not preserve the Cartan matrix")
    if not rd.is_simply_connected:
        raise FoldingError("pinned automorphisms are built on simply-connected data")
    sc = rd.simple_coroots
    # on cocharacters: column k of the matrix is the image of basis vector e_k
    images = []
    for e in _units(rd.rank):
        c = coordinates(e, sc)
        img = [0] * rd.rank
        for i, ci in enumerate(c):
            for k, v in enumerate(sc[perm[i]]):
                img[k] += ci * v
        images.append(tuple(int(v) for v in img))
    co = IntegerMatrix(images, rd.rank).T
    inv_t = _inverse_unimodular(co).T
    on_x = LatticeAutomorphism.of(inv_t)
    on_y = LatticeAutomorphism.of(co)
    return PinnedAutomorphism(rd, perm, on_x, on_y)


def _units(n):
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def _inverse_unimodular(m: IntegerMatrix) -> IntegerMatrix:
    n = m.nrows
    cols = [m.col(j) for j in range(n)]
    inv_cols = [coordinates(e, cols) for e in _units(n)]
    return IntegerMatrix(inv_cols, n).T


def standard_automorphism(rd: RootDatum, kind: str = "flip") -> PinnedAutomorphism:
    """Named diagram automorphisms of a simple simply-connected datum (Bourbaki numbering).

    ``flip`` is the order-two symmetry of A_n, D_n or E_6; ``triality`` the order-three
    symmetry of D_4; ``identity`` the trivial one.
    """
    n = rd.semisimple_rank
    if kind in ("id", "identity", "none"):
        return pinned_automorphism(rd, range(n))
    letters = [l for l, _ in rd.cartan_type]
    if len(letters) != 1:
        if kind in ("swap", "flip") and len(rd.cartan_type) == 2 and rd.cartan_type[0] == rd.cartan_type[1]:
            half = n // 2
            return pinned_automorphism(rd, [i + half if i < half else i - half for i in range(n)])
        raise FoldingError("named automorphisms need a simple datum or two equal factors")
    letter = letters[0]
    if kind == "flip":
        if letter == "A":
            perm = [n - 1 - i for i in range(n)]
        elif letter == "D":
            perm = list(range(n - 2)) + [n - 1, n - 2]
        elif letter == "E" and n == 6:
            perm = [5, 1, 4, 3, 2, 0]
        else:
            raise FoldingError(f"no flip for {letter}{n}")
    elif kind == "triality":
        if (letter, n) != ("D", 4):
            raise FoldingError("triality only exists for D4")
        perm = [2, 1, 3, 0]
    else:
        raise FoldingError(f"unknown automorphism {kind!r}")
    return pinned_automorphism(rd, perm)


@dataclass(frozen=True)
class FoldedData:
    """Folded and cofolded data of a pinned pair plus the bookkeeping that produced them."""

    theta: PinnedAutomorphism
    folded: RootDatum
    cofolded: RootDatum
    orbit_map: tuple[tuple[int, ...], ...]  # orbits of root indices of the base datum
    norm_roots: tuple[Row, ...]  # Nm(alpha) in base coordinates, per root
    orbit_sums: tuple[Row, ...]  # beta_[alpha] in base coordinates, per root
    fixed_cochar_basis: tuple[Row, ...]
    fixed_char_basis: tuple[Row, ...]

    def ratio_identity_holds(self) -> bool:
        """``Nm(alpha) = (m / |[alpha]|) beta_[alpha]`` for every root."""
        m = self.theta.order
        size = {k: len(o) for o in self.orbit_map for k in o}
        return all(
            tuple(Fraction(m, size[k]) * v for v in self.orbit_sums[k]) == self.norm_roots[k]
            for k in range(len(self.norm_roots))
        )

    def to_json(self) -> dict:
        return {
            "folded": self.folded.to_json(),
            "cofolded": self.cofolded.to_json(),
            "orbit_map": [list(o) for o in self.orbit_map],
            "folded_type": self.folded.type_label(),
            "cofolded_type": self.cofolded.type_label(),
        }


def _root_orbits(rd: RootDatum, theta: PinnedAutomorphism) -> list[tuple[int, ...]]:
    idx = rd.root_index
    seen, out = set(), []
    for k, a in enumerate(rd.roots):
        if k in seen:
            continue
        orb, x = [], a
        while idx[x] not in orb:
            orb.append(idx[x])
            x = theta(x)
        seen.update(orb)
        out.append(tuple(orb))
    return out


def _has_a2l_component(theta: PinnedAutomorphism) -> bool:
    """True when some orbit of simple roots contains two linked roots."""
    cart = theta.base.cartan
    for orb in theta.simple_orbits():
        for i, j in itertools.combinations(orb, 2):
            if cart[i][j]:
                return True
    return False


def _sum(vectors, n) -> Row:
    out = [0] * n
    for v in vectors:
        for i, x in enumerate(v):
            out[i] += x
    return tuple(out)


def fold(rd: RootDatum, theta: PinnedAutomorphism) -> FoldedData:
    """Folded and cofolded root data for a simply-connected simply-laced datum."""
    if theta.base != rd:
        raise FoldingError("automorphism is not defined on this datum")
    if not rd.is_simply_connected:
        raise FoldingError("fold expects a simply-connected datum")
    if any(l not in "ADE" for l, _ in rd.cartan_type):
        raise FoldingError("fold expects a simply-laced datum")
    if _has_a2l_component(theta):
        raise FoldingError(
            "theta acts nontrivially on a component of type A_2l; use a2l_cofold / a2l_fold instead"
        )
    n = rd.rank
    m = theta.order
    orbits = _root_orbits(rd, theta)
    orbit_of = {k: o for o in orbits for k in o}

    norm_roots, orbit_sums = [], []
    for k, a in enumerate(rd.roots):
        images, x = [], a
        for _ in range(m):
            images.append(x)
            x = theta(x)
        norm_roots.append(_sum(images, n))
        orbit_sums.append(_sum([rd.roots[j] for j in orbit_of[k]], n))

    ident = IntegerMatrix.identity(n)
    f_basis = kernel_basis(ident - theta.on_cocharacters.matrix)  # X_*^theta
    g_basis = kernel_basis(ident - theta.on_characters.matrix)  # X^theta

    def coinv_char(x):  # X -> X_theta, coordinates dual to f_basis
        return tuple(pair(x, f) for f in f_basis)

    def coinv_cochar(y):  # X^vee -> X^vee_theta
        return tuple(pair(g, y) for g in g_basis)

    simple_orbits = theta.simple_orbits()
    sr, sc = rd.simple_roots, rd.simple_coroots

    fold_simple = [coinv_char(sr[o[0]]) for o in simple_orbits]
    fold_cosimple = [
        tuple(int(c) for c in coordinates(_sum([sc[i] for i in o], n), f_basis)) for o in simple_orbits
    ]
    cofold_simple = [
        tuple(int(c) for c in coordinates(_sum([sr[i] for i in o], n), g_basis)) for o in simple_orbits
    ]
    cofold_cosimple = [coinv_cochar(sc[o[0]]) for o in simple_orbits]

    k = len(f_basis)
    folded = RootDatum.from_simple(k, fold_simple, fold_cosimple)
    cofolded = RootDatum.from_simple(k, cofold_simple, cofold_cosimple)

    # sanity: every root maps into the folded / cofolded root sets
    froots = set(folded.roots)
    croots = set(cofolded.roots)
    for kk, a in enumerate(rd.roots):
        if coinv_char(a) not in froots:
            raise FoldingError("image of a root is not a folded root")
        cs = tuple(int(c) for c in coordinates(orbit_sums[kk], g_basis))
        if cs not in croots:
            raise FoldingError("orbit sum is not a cofolded root")

    folded = _label(_order_base_bourbaki(folded))
    cofolded = _label(_order_base_bourbaki(cofolded))
    return FoldedData(
        theta,
        folded,
        cofolded,
        tuple(orbits),
        tuple(norm_roots),
        tuple(orbit_sums),
        tuple(f_basis),
        tuple(g_basis),
    )


_SC = {"A": lambda n: f"SL_{n + 1}", "B": lambda n: f"Spin_{2 * n + 1}", "C": lambda n: f"Sp_{2 * n}", "D": lambda n: f"Spin_{2 * n}"}
_AD = {"A": lambda n: f"PGL_{n + 1}", "B": lambda n: f"SO_{2 * n + 1}", "C": lambda n: f"PSp_{2 * n}", "D": lambda n: f"PSO_{2 * n}"}


def group_name(rd: RootDatum) -> str:
    """Conventional name of a simple group from its type and isogeny (``?`` when ambiguous)."""
    types = normalize_type(rd.cartan_type)
    if len(types) != 1:
        return type_string(types)
    letter, n = types[0]
    if rd.is_simply_connected:
        return _SC[letter](n) if letter in _SC else f"{letter}{n}"
    if rd.is_adjoint:
        return _AD[letter](n) if letter in _AD else f"{letter}{n}"
    if letter == "D":
        return f"SO_{2 * n}" if _is_vector_quotient(rd) else f"HSpin_{2 * n}"
    return f"{letter}{n}(intermediate)"


def _is_vector_quotient(rd: RootDatum) -> bool:
    # SO_{2n} has center character group Z/2 and contains the vector weight; accept the Z/2 cases
    return rd.center_group.order() == 2 if rd.center_group.is_finite else False


def _label(rd: RootDatum) -> RootDatum:
    return RootDatum(rd.rank, rd.roots, rd.coroots, group_name(rd), rd.cartan_type)


def adjoint_form(rd: RootDatum) -> RootDatum:
    """Datum with the same Cartan matrix whose character lattice is the root lattice."""
    cart = rd.cartan
    ell = len(cart)
    roots = _units(ell)
    coroots = [tuple(cart[j][i] for j in range(ell)) for i in range(ell)]
    return _label(RootDatum.from_simple(ell, roots, coroots))


def isomorphic_data(a: RootDatum, b: RootDatum) -> bool:
    """Decide whether two semisimple root data are isomorphic.

    Searches for a Cartan-preserving bijection of simple roots whose induced
    rational map carries the character lattice of ``a`` onto that of ``b``.
    """
    if a.rank != b.rank or len(a.roots) != len(b.roots):
        return False
    if not (a.is_semisimple and b.is_semisimple):
        raise RootDataError("isomorphism test needs semisimple data")
    ca, cb = a.cartan, b.cartan
    ell = len(ca)
    if ell != len(cb):
        return False
    for perm in _all_isomorphisms(ca, cb):
        # rational map M with M(a.simple[i]) = b.simple[perm[i]]
        ok = True
        images = []
        for e in _units(a.rank):
            c = coordinates(e, a.simple_roots)
            img = [Fraction(0)] * b.rank
            for i, ci in enumerate(c):
                for t, v in enumerate(b.simple_roots[perm[i]]):
                    img[t] += ci * v
            if any(x.denominator != 1 for x in img):
                ok = False
                break
            images.append(tuple(int(x) for x in img))
        if ok and abs(IntegerMatrix(images, b.rank).det()) == 1:
            return True
    return False


def _all_isomorphisms(target, c):
    n = len(target)
    for perm in itertools.permutations(range(n)):
        if all(c[perm[i]][perm[j]] == target[i][j] for i in range(n) for j in range(n)):
            yield perm


def dual_of_invariant_group(fd: FoldedData) -> RootDatum:
    """Langlands dual of the folded datum; equals the adjoint form of the cofolded datum."""
    from .rootdata import langlands_dual

    dual = _label(langlands_dual(fd.folded))
    if not isomorphic_data(dual, adjoint_form(fd.cofolded)):
        raise FoldingError("dual of the folded datum is not the adjoint cofolded datum")
    return dual


def duality_pairing_ok(fd: FoldedData) -> bool:
    """Folded roots and cofolded roots are mutually dual root systems.

    Folded coroots sit in the cocharacter lattice of the folded datum, whose
    coordinates are those of the fixed cocharacters; after identifying the
    cocharacters with characters through the simply-laced Killing form they are
    exactly the cofolded roots, so the Cartan matrices must be transposes.
    """
    ca = fd.folded.cartan
    cb = fd.cofolded.cartan
    ct = [list(r) for r in zip(*ca)]
    return _find_isomorphism(ct, cb) is not None


# ---------------------------------------------------------------- the A_{2l} case


def sl_odd(ell: int) -> tuple[RootDatum, PinnedAutomorphism]:
    rd = build_root_datum("A", 2 * ell, "sc")
    return rd, standard_automorphism(rd, "flip")


def a2l_cofold(ell: int) -> RootDatum:
    """Type C datum spanned by ``alpha_i + alpha_{2l+1-i}`` (i < l) and ``2(alpha_l + alpha_{l+1})``.

    Character lattice: the theta-invariant weights of ``SL_{2l+1}``; coroots: the
    images of ``alpha_i^vee`` in the coinvariant cocharacters.
    """
    if ell < 1:
        raise FoldingError("ell must be at least 1")
    rd, theta = sl_odd(ell)
    n = rd.rank
    g_basis = kernel_basis(IntegerMatrix.identity(n) - theta.on_characters.matrix)
    sr, sc = rd.simple_roots, rd.simple_coroots
    simple, cosimple = [], []
    for i in range(ell):
        j = 2 * ell - 1 - i
        beta = _sum([sr[i], sr[j]], n)
        if i == ell - 1:
            beta = tuple(2 * v for v in beta)
        simple.append(tuple(int(c) for c in coordinates(beta, g_basis)))
        cosimple.append(tuple(pair(g, sc[i]) for g in g_basis))
    return _label(_order_base_bourbaki(RootDatum.from_simple(len(g_basis), simple, cosimple)))


def a2l_fold(ell: int) -> RootDatum:
    """Root datum of the theta-fixed subgroup of ``SL_{2l+1}`` (type B, adjoint).

    Roots are the images of the non-fixed roots in the coinvariant characters;
    the image of ``alpha_l`` is short with coroot ``2(alpha_l^vee + alpha_{l+1}^vee)``.
    """
    if ell < 1:
        raise FoldingError("ell must be at least 1")
    rd, theta = sl_odd(ell)
    n = rd.rank
    f_basis = kernel_basis(IntegerMatrix.identity(n) - theta.on_cocharacters.matrix)
    sr, sc = rd.simple_roots, rd.simple_coroots
    simple, cosimple = [], []
    for i in range(ell):
        j = 2 * ell - 1 - i
        simple.append(tuple(pair(sr[i], f) for f in f_basis))
        co = _sum([sc[i], sc[j]], n)
        if i == ell - 1:
            co = tuple(2 * v for v in co)
        cosimple.append(tuple(int(c) for c in coordinates(co, f_basis)))
    return _label(_order_base_bourbaki(RootDatum.from_simple(len(f_basis), simple, cosimple)))


# ---------------------------------------------------------------- mu -> mu_0


def fundamental_weights(rd: RootDatum) -> list[Row]:
    """Dual basis to the simple coroots (integral for simply-connected data)."""
    sc = rd.simple_coroots
    n = rd.rank
    k = IntegerMatrix(sc, n)
    inv = _inverse_unimodular(k)  # k @ inv = I, so column i of inv pairs to delta with row j of k
    return [inv.col(i) for i in range(n)]


def mu_zero_hom(theta: PinnedAutomorphism) -> IntegerMatrix:
    """Matrix (on column vectors of ``X``) of ``mu -> -theta^{-1}(mu) + sum_i n_i varpi_i``.

    ``n_i = <mu, alpha_i^vee>``, the sum runs over the lowest-index representative
    ``i`` of each simple orbit, and ``varpi_i`` is the orbit sum of fundamental weights.
    """
    rd = theta.base
    n = rd.rank
    omegas = fundamental_weights(rd)
    reps = [(o[0], _sum([omegas[j] for j in o], n)) for o in theta.simple_orbits()]
    inv = theta.inverse_matrix()
    cols = []
    for e in _units(n):
        out = [-v for v in inv.apply(e)]
        for i, varpi in reps:
            ni = pair(e, rd.simple_coroots[i])
            out = [a + ni * b for a, b in zip(out, varpi)]
        cols.append(tuple(out))
    return IntegerMatrix(cols, n).T


# ---------------------------------------------------------------- catalog of Table-1 style rows


@dataclass(frozen=True)
class FoldRow:
    group: str
    automorphism: str
    invariant_group: str
    invariant_type: str
    coinvariant_group: str
    coinvariant_type: str
    invariant_isogeny: str
    coinvariant_isogeny: str

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _row_from(group, auto, inv: RootDatum, coinv: RootDatum) -> FoldRow:
    return FoldRow(
        group,
        auto,
        group_name(inv),
        type_string(normalize_type(inv.cartan_type)),
        group_name(coinv),
        type_string(normalize_type(coinv.cartan_type)),
        inv.isogeny(),
        coinv.isogeny(),
    )


def fold_table(max_ell: int = 4) -> list[FoldRow]:
    """Invariant / coinvariant groups for every outer automorphism family up to ``max_ell``."""
    rows = []
    for ell in range(1, max_ell + 1):
        if ell >= 2:
            rd = build_root_datum("A", 2 * ell - 1, "sc")
            fd = fold(rd, standard_automorphism(rd, "flip"))
            rows.append(_row_from(f"SL_{2 * ell}", "transpose-inverse", fd.folded, fd.cofolded))
    for ell in range(1, max_ell + 1):
        rows.append(_row_from(f"SL_{2 * ell + 1}", "transpose-inverse", a2l_fold(ell), a2l_cofold(ell)))
    for ell in range(1, max_ell + 1):
        rd = build_root_datum("D", ell + 1, "sc")
        if ell == 1:
            theta = pinned_automorphism(rd, [1, 0])
        else:
            theta = standard_automorphism(rd, "flip") if ell >= 3 else pinned_automorphism(rd, [0, 2, 1])
        fd = fold(rd, theta)
        rows.append(_row_from(f"Spin_{2 * ell + 2}", "conjugation by P", fd.folded, fd.cofolded))
    rd = build_root_datum("E", 6, "sc")
    fd = fold(rd, standard_automorphism(rd, "flip"))
    rows.append(_row_from("E6", "diagram flip", fd.folded, fd.cofolded))
    rd = build_root_datum("D", 4, "sc")
    fd = fold(rd, standard_automorphism(rd, "triality"))
    rows.append(_row_from("Spin_8", "triality", fd.folded, fd.cofolded))
    return rows


@dataclass(frozen=True)
class DualityRow:
    pair: str
    affine: str
    dual_affine: str
    dual_pair: str
    computed_matches: bool
    dual_matches: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _affine_row(pair_name, label, rd, theta, dual_pair, dual_rd, dual_theta) -> DualityRow:
    from .rootdata import _gcm_isomorphic, affine_diagram, dual_affine

    computed = affine_diagram(rd, theta)
    dual = dual_affine(label)
    from_dual_pair = affine_diagram(dual_rd, dual_theta)
    return DualityRow(
        pair_name,
        label.notation,
        dual.notation,
        dual_pair,
        _gcm_isomorphic(label.gcm(), computed.gcm()),
        _gcm_isomorphic(dual.gcm(), from_dual_pair.gcm()),
    )


def duality_table(max_rank: int = 4) -> list[DualityRow]:
    """Pairs matched under duality with their affine diagrams.

    Family parameters (``r`` for SL_r and Spin_2r, ``l`` for the twisted families)
    run up to ``max_rank``; exceptional rows are always present.  Each row checks
    that the labelled diagram is the one computed from the pair and that its dual
    is the one computed from the dual pair.
    """
    from .rootdata import AffineDiagramType as T

    rows = []
    for r in range(2, max_rank + 1):
        rd = build_root_datum("A", r - 1, "sc")
        rows.append(_affine_row(f"(SL_{r}, SL_{r})", T("A", r - 1, 1), rd, None, f"(PGL_{r}, SL_{r})", rd, None))
    for r in range(4, max_rank + 1):
        rd = build_root_datum("D", r, "sc")
        t = T("D", r, 1)
        rows.append(_affine_row(f"(SO_{2 * r}, Spin_{2 * r})", t, rd, None, f"(SO_{2 * r}, Spin_{2 * r})", rd, None))
        rows.append(_affine_row(f"(Spin_{2 * r}, Spin_{2 * r})", t, rd, None, f"(PSO_{2 * r}, Spin_{2 * r})", rd, None))
    for n in (6, 7, 8):
        rd = build_root_datum("E", n, "sc")
        rows.append(_affine_row(f"(E{n}, E{n})", T("E", n, 1), rd, None, f"(E{n}, E{n})", rd, None))
    for ell in range(2, max_rank + 1):
        rd = build_root_datum("A", 2 * ell - 1, "sc")
        rows.append(
            _affine_row(
                f"(SL_{2 * ell}, SL_{2 * ell}theta)",
                T("A", 2 * ell - 1, 2),
                rd,
                standard_automorphism(rd, "flip"),
                f"(SO_{2 * ell + 1}, Spin_{2 * ell + 1})",
                build_root_datum("B", ell, "sc"),
                None,
            )
        )
    for ell in range(2, max_rank + 1):
        rd = build_root_datum("D", ell + 1, "sc")
        theta = standard_automorphism(rd, "flip") if ell >= 3 else pinned_automorphism(rd, [0, 2, 1])
        rows.append(
            _affine_row(
                f"(Spin_{2 * ell + 2}, Spin_{2 * ell + 2}theta)",
                T("D", ell + 1, 2),
                rd,
                theta,
                f"(PSp_{2 * ell}, Sp_{2 * ell})",
                build_root_datum("C", ell, "sc"),
                None,
            )
        )
    rd = build_root_datum("E", 6, "sc")
    rows.append(
        _affine_row("(E6, E6theta)", T("E", 6, 2), rd, standard_automorphism(rd, "flip"), "(F4, F4)", build_root_datum("F", 4, "sc"), None)
    )
    rd = build_root_datum("D", 4, "sc")
    rows.append(
        _affine_row(
            "(Spin_8, Spin_8theta_3)", T("D", 4, 3), rd, standard_automorphism(rd, "triality"), "(G2, G2)", build_root_datum("G", 2, "sc"), None
        )
    )
    for ell in range(1, max_rank + 1):
        rd, theta = sl_odd(ell)
        rows.append(
            _affine_row(
                f"(SL_{2 * ell + 1}, SL_{2 * ell + 1}theta)",
                T("A", 2 * ell, 2),
                rd,
                theta,
                f"(SL_{2 * ell + 1}, SL_{2 * ell + 1}vartheta)",
                rd,
                theta,
            )
        )
    return rows
