"""Matrix models for SL_n: pinnings, Steinberg sections, twisted conjugation and
the outer involutions of SL_n together with their fixed subalgebras."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .config import DEFAULTS, bound
from .gaussian import GQ, I, ExactMatrix
from .lattice import IntegerMatrix
from .rootdata import RootDatum, classify_cartan, normalize_type, type_string

ENUMERATION_CAP = DEFAULTS["TWISTFOLD_COXETER_CAP"]


class MatrixGroupError(ValueError):
    pass


def E(n: int, i: int, j: int, c=1) -> ExactMatrix:
    return ExactMatrix.unit(n, i, j, c)


# ---------------------------------------------------------------- pinning


@dataclass(frozen=True)
class Pinning:
    """Diagonal torus, upper triangular Borel and root groups ``u_i(x) = I + x E_{i,i+1}``.

    Simple roots are numbered ``1 .. n-1``.
    """

    n: int

    def _check(self, i: int) -> None:
        if not 1 <= i < self.n:
            raise MatrixGroupError(f"simple root index {i} outside 1..{self.n - 1}")

    def u(self, i: int, x) -> ExactMatrix:
        self._check(i)
        return ExactMatrix.identity(self.n) + E(self.n, i, i + 1, x)

    def u_neg(self, i: int, x) -> ExactMatrix:
        self._check(i)
        return ExactMatrix.identity(self.n) + E(self.n, i + 1, i, x)

    def u_root(self, i: int, j: int, x) -> ExactMatrix:
        """Root group of ``e_i - e_j`` for any ``i != j``."""
        return ExactMatrix.identity(self.n) + E(self.n, i, j, x)

    def root_value(self, i: int, t: ExactMatrix, j: int | None = None):
        """``alpha(t)`` for ``alpha = e_i - e_j`` (default: the simple root ``alpha_i``)."""
        j = i + 1 if j is None else j
        return t[i - 1, i - 1] * _reciprocal(t[j - 1, j - 1])

    def s_dot(self, i: int) -> ExactMatrix:
        """``u_i(1) u_{-i}(-1) u_i(1)``, a lift of the simple reflection."""
        return self.u(i, 1) @ self.u_neg(i, -1) @ self.u(i, 1)

    def torus(self, entries: Sequence) -> ExactMatrix:
        if len(entries) == self.n - 1:
            last = 1
            for e in entries:
                last = last * e
            entries = list(entries) + [_reciprocal(last)]
        return ExactMatrix.diag(entries)


def build_pinning(n: int) -> Pinning:
    if n < 2:
        raise MatrixGroupError("SL_n pinning needs n >= 2")
    return Pinning(n)


def _reciprocal(x):
    return x.inverse() if isinstance(x, GQ) else 1 / x


def conjugate(g: ExactMatrix, x: ExactMatrix, g_inv: ExactMatrix | None = None) -> ExactMatrix:
    return g @ x @ (g.inverse() if g_inv is None else g_inv)


def diag_inverse(t: ExactMatrix) -> ExactMatrix:
    return ExactMatrix.diag([_reciprocal(t[i, i]) for i in range(t.n)])


# ---------------------------------------------------------------- automorphisms


@dataclass(frozen=True)
class GroupAutomorphism:
    """Automorphism of SL_n given by its action on matrices and on sl_n."""

    kind: str
    n: int
    action: Callable[[ExactMatrix], ExactMatrix] = field(repr=False, compare=False)
    differential: Callable[[ExactMatrix], ExactMatrix] = field(repr=False, compare=False)
    data: tuple = ()

    def __call__(self, a: ExactMatrix) -> ExactMatrix:
        return self.action(a)

    def d(self, x: ExactMatrix) -> ExactMatrix:
        return self.differential(x)

    def then(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        """``other ∘ self``."""
        return GroupAutomorphism(
            "composite",
            self.n,
            lambda a: other.action(self.action(a)),
            lambda x: other.differential(self.differential(x)),
            (self, other),
        )

    def power(self, k: int) -> "GroupAutomorphism":
        if k < 0:
            raise MatrixGroupError("negative powers are not supported")
        out = identity_automorphism(self.n)
        for _ in range(k):
            out = out.then(self)
        return out

    def differential_matrix(self) -> list[list[GQ]]:
        """Matrix of ``d phi`` in the standard basis of sl_n (columns are images)."""
        basis = sl_basis(self.n)
        cols = [sl_coordinates(self.differential(b)) for b in basis]
        return [list(r) for r in zip(*cols)]

    def order(self, bound: int = 64) -> int:
        """Order of the automorphism, read off from its differential (SL_n is connected)."""
        m = self.differential_matrix()
        k = len(m)
        ident = [[GQ(int(i == j)) for j in range(k)] for i in range(k)]
        p = m
        for e in range(1, bound + 1):
            if p == ident:
                return e
            p = _matmul(p, m)
        raise MatrixGroupError(f"order exceeds {bound}")


def identity_automorphism(n: int) -> GroupAutomorphism:
    return GroupAutomorphism("identity", n, lambda a: a, lambda x: x)


def inner(g: ExactMatrix) -> GroupAutomorphism:
    g_inv = g.inverse()
    return GroupAutomorphism(
        "inner", g.n, lambda a: g @ a @ g_inv, lambda x: g @ x @ g_inv, (g,)
    )


def alternating_antidiagonal(n: int) -> ExactMatrix:
    return ExactMatrix.antidiag([(-1) ** k for k in range(n)])


def transpose_inverse_involution(n: int) -> GroupAutomorphism:
    """``A -> N (A^T)^{-1} N^{-1}`` with ``N`` the alternating antidiagonal matrix."""
    nmat = alternating_antidiagonal(n)
    n_inv = nmat.inverse()

    def act(a: ExactMatrix) -> ExactMatrix:
        return nmat @ a.T.inverse() @ n_inv

    def dact(x: ExactMatrix) -> ExactMatrix:
        return -(nmat @ x.T @ n_inv)

    return GroupAutomorphism("theta", n, act, dact, (nmat,))


def r_matrix(ell: int) -> ExactMatrix:
    return ExactMatrix.diag([GQ(1)] + [I, -I] * ell)


def theta_automorphism(ell: int, kind: str = "theta") -> GroupAutomorphism:
    """The involution ``theta_ell`` of SL_{2 ell + 1}, or ``Ad_R ∘ theta_ell`` for ``kind='vartheta'``."""
    if ell < 1:
        raise MatrixGroupError("ell must be positive")
    th = transpose_inverse_involution(2 * ell + 1)
    if kind == "theta":
        return th
    if kind == "vartheta":
        composed = th.then(inner(r_matrix(ell)))
        return GroupAutomorphism("vartheta", th.n, composed.action, composed.differential, (ell,))
    raise MatrixGroupError(f"unknown kind {kind!r}")


def pinning_permutation(theta: GroupAutomorphism, sample=GQ(3)) -> dict[int, tuple[int, GQ]]:
    """For each simple root ``i`` the pair ``(j, c)`` with ``theta(u_i(x)) = u_j(c x)``."""
    p = build_pinning(theta.n)
    out = {}
    for i in range(1, theta.n):
        img = theta(p.u(i, sample))
        hit = None
        for j in range(1, theta.n):
            c = img[j - 1, j] / sample
            if img == p.u(j, img[j - 1, j]) and c:
                hit = (j, c)
        if hit is None:
            raise MatrixGroupError(f"automorphism does not preserve the pinning at root {i}")
        out[i] = hit
    return out


# ---------------------------------------------------------------- sl_n linear algebra


def sl_basis(n: int) -> list[ExactMatrix]:
    """Off-diagonal units ``E_ij`` in row-major order, then ``H_k = E_kk - E_{k+1,k+1}``."""
    out = [E(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    out += [E(n, k, k) - E(n, k + 1, k + 1) for k in range(1, n)]
    return out


def sl_coordinates(x: ExactMatrix) -> list:
    n = x.n
    coords = [x[i, j] for i in range(n) for j in range(n) if i != j]
    run = 0
    for k in range(n - 1):
        run = run + x[k, k]
        coords.append(run)
    return coords


def sl_from_coordinates(n: int, coords: Sequence) -> ExactMatrix:
    out = ExactMatrix.zeros(n)
    for c, b in zip(coords, sl_basis(n)):
        if c:
            out = out + b.scale(c)
    return out


def bracket(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    return x @ y - y @ x


def _matmul(a, b):
    # differentials are very sparse; accumulate only over nonzero entries
    zero = GQ(0)
    width = len(b[0]) if b else 0
    b_rows = [[(j, y) for j, y in enumerate(r) if y] for r in b]
    out = []
    for r in a:
        acc = [zero] * width
        for k, x in enumerate(r):
            if x:
                for j, y in b_rows[k]:
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def nullspace(rows: Sequence[Sequence]) -> list[list[GQ]]:
    """Basis of ``{v : M v = 0}`` over Q(i) by reduced row echelon form."""
    m = [[GQ.coerce(e) for e in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots, r = [], 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        m[r] = [e * inv for e in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [GQ(0)] * ncols
        v[fcol] = GQ(1)
        for row, pc in enumerate(pivots):
            v[pc] = -m[row][fcol]
        basis.append(v)
    return basis


def _minus_identity(m):
    return [[e - (1 if i == j else 0) for j, e in enumerate(r)] for i, r in enumerate(m)]


# ---------------------------------------------------------------- fixed subalgebras


@dataclass(frozen=True)
class FixedSubalgebra:
    dimension: int
    rank: int
    cartan_type: str | None
    basis: tuple = field(repr=False)
    roots: tuple = field(repr=False, default=())

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "rank": self.rank, "type": self.cartan_type}


def fixed_subalgebra(phi: GroupAutomorphism) -> FixedSubalgebra:
    """Fixed points of ``d phi`` on sl_n, with rank and Cartan type when ``phi`` preserves the diagonal."""
    n = phi.n
    dm = phi.differential_matrix()
    kern = nullspace(_minus_identity(dm))
    basis = tuple(sl_from_coordinates(n, v) for v in kern)

    diag_basis = [E(n, k, k) - E(n, k + 1, k + 1) for k in range(1, n)]
    if not all(_is_diagonal(phi.d(h)) for h in diag_basis):
        return FixedSubalgebra(len(kern), -1, None, basis)

    # fixed diagonal part: kernel of (dphi - 1) on the H_k block
    off = n * (n - 1)
    block = [[dm[off + a][off + b] for b in range(n - 1)] for a in range(n - 1)]
    h_fix = [
        sum((diag_basis[k].scale(v[k]) for k in range(n - 1) if v[k]), ExactMatrix.zeros(n))
        for v in nullspace(_minus_identity(block))
    ]
    rank = len(h_fix)

    # restricted weights of the root spaces E_ij
    spaces: dict[tuple, list[tuple[int, int]]] = {}
    for i in range(n):
        for j in range(n):
            if i != j:
                w = tuple(h[i, i] - h[j, j] for h in h_fix)
                spaces.setdefault(w, []).append((i, j))

    roots = []
    total = rank
    for w, cells in sorted(spaces.items(), key=lambda kv: kv[1]):
        mult = _fixed_dim_on(phi, n, cells)
        total += mult
        if mult and any(w):
            if mult > 1:
                return FixedSubalgebra(len(kern), rank, None, basis)
            roots.append(w)
        elif mult and not any(w):
            # fixed vectors of weight zero would enlarge the Cartan
            return FixedSubalgebra(len(kern), rank, None, basis)
    if total != len(kern):
        raise MatrixGroupError("weight decomposition does not account for the fixed algebra")

    gram = [[(a @ b).trace() for b in h_fix] for a in h_fix]
    ctype = _classify_roots(roots, gram) if roots else ("T" + str(rank))
    if ctype in ("B2", "C2"):
        # B2 and C2 coincide; call it B2 when a zero weight of C^n is moved by the algebra
        zero = [i for i in range(n) if all(not h[i, i] for h in h_fix)]
        moved = any(x[r, i] for i in zero for x in basis for r in range(n))
        ctype = "B2" if moved else "C2"
    return FixedSubalgebra(len(kern), rank, ctype, basis, tuple(roots))


def _is_diagonal(x: ExactMatrix) -> bool:
    return all(not x[i, j] for i in range(x.n) for j in range(x.n) if i != j)


def _fixed_dim_on(phi: GroupAutomorphism, n: int, cells) -> int:
    idx = {c: k for k, c in enumerate(cells)}
    cols = []
    for i, j in cells:
        img = phi.d(E(n, i + 1, j + 1))
        col = [GQ(0)] * len(cells)
        for a in range(n):
            for b in range(n):
                if img[a, b]:
                    if (a, b) not in idx:
                        raise MatrixGroupError("differential does not preserve a weight space")
                    col[idx[(a, b)]] = img[a, b]
        cols.append(col)
    mat = [list(r) for r in zip(*cols)]
    return len(nullspace(_minus_identity(mat)))


def _classify_roots(roots, gram) -> str:
    k = len(gram)
    ginv = ExactMatrix(gram).inverse()

    def ip(a, b):
        return sum((a[i] * ginv[i, j] * b[j] for i in range(k) for j in range(k)), GQ(0))

    def positive(v):
        for c in v:
            c = GQ.coerce(c)
            if c.re:
                return c.re > 0
        return False

    pos = [r for r in roots if positive(r)]
    sums = {tuple(a + b for a, b in zip(x, y)) for x in pos for y in pos}
    simple = [r for r in pos if r not in sums]
    cart = []
    for a in simple:
        row = []
        for b in simple:
            v = (ip(a, b) * 2) / ip(b, b)
            if v.im or v.re.denominator != 1:
                raise MatrixGroupError("non-integral Cartan entry")
            row.append(int(v.re))
        cart.append(row)
    return type_string(normalize_type(classify_cartan(cart)))


def bracket_closed(fs: FixedSubalgebra, phi: GroupAutomorphism) -> bool:
    """Brackets of basis elements stay fixed by ``d phi``."""
    for x, y in itertools.combinations(fs.basis, 2):
        z = bracket(x, y)
        if phi.d(z) != z:
            return False
    return True


# ---------------------------------------------------------------- twisted conjugation


def twisted_conjugate(g: ExactMatrix, x: ExactMatrix, theta: GroupAutomorphism) -> ExactMatrix:
    """``g * x = g x theta(g)^{-1}``."""
    if not g.det() or not x.det():
        raise MatrixGroupError("twisted conjugation needs invertible matrices")
    return g @ x @ theta(g).inverse()


def random_sl(n: int, rng: random.Random, steps: int = 6, spread: int = 3) -> ExactMatrix:
    """Random element of SL_n(Z): a product of elementary matrices and a diagonal rescaling."""
    p = build_pinning(n)
    m = ExactMatrix.identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(1, n + 1), 2)
        m = m @ p.u_root(i, j, rng.randint(-spread, spread))
    d = [GQ(Fraction(rng.choice([1, 2, 3]), rng.choice([1, 2]))) * rng.choice([1, -1]) for _ in range(n - 1)]
    return m @ p.torus(d)


# ---------------------------------------------------------------- twisted characters


def twisted_adjoint_trace(g: ExactMatrix, phi: GroupAutomorphism, g_inv: ExactMatrix | None = None):
    """Trace of ``Ad_g ∘ d phi`` on sl_n."""
    g_inv = g.inverse() if g_inv is None else g_inv
    total = 0
    for k, b in enumerate(sl_basis(phi.n)):
        total = total + sl_coordinates(g @ phi.d(b) @ g_inv)[k]
    return total


def twisted_character(t: ExactMatrix, theta: GroupAutomorphism):
    """Adjoint twisted character at a diagonal torus point ``t``."""
    if not _is_diagonal(t):
        raise MatrixGroupError("torus point must be diagonal")
    return twisted_adjoint_trace(t, theta, diag_inverse(t))


def symbolic_twisted_character_sl3():
    """``(value, x1, x2)`` for ``t = diag(x1, x2, 1/(x1 x2))`` and ``theta_1``; ``value`` is a sympy expression."""
    import sympy

    x1, x2 = sympy.symbols("x1 x2", nonzero=True)
    t = ExactMatrix.diag([x1, x2, 1 / (x1 * x2)])
    value = sympy.simplify(twisted_character(t, theta_automorphism(1)))
    return value, x1, x2


def as_laurent_in_z(expr, x1, x2):
    """Rewrite ``expr(x1, x2)`` in ``z = x1^2 x2``; ``None`` when it depends on more than ``z``."""
    import sympy

    z = sympy.Symbol("z", nonzero=True)
    out = sympy.simplify(expr.subs(x2, z / x1**2))
    if x1 in out.free_symbols:
        return None
    return sympy.expand(out), z


# ---------------------------------------------------------------- Steinberg sections


def steinberg_section(n: int, sigma: Sequence[int] | None = None, x: Sequence = (), s_dots=None) -> ExactMatrix:
    """``prod_i u_{sigma(i)}(x_i) s_{sigma(i)}`` with ``sigma`` an ordering of ``1..n-1``."""
    p = build_pinning(n)
    sigma = tuple(range(1, n)) if sigma is None else tuple(sigma)
    if sorted(sigma) != list(range(1, n)):
        raise MatrixGroupError("sigma must order the simple roots 1..n-1")
    if len(x) != n - 1:
        raise MatrixGroupError(f"need {n - 1} coordinates")
    s_dots = s_dots or {}
    m = ExactMatrix.identity(n)
    for xi, i in zip(x, sigma):
        m = m @ p.u(i, xi) @ s_dots.get(i, p.s_dot(i))
    return m


def characteristic_coefficients(m: ExactMatrix) -> list:
    """Coefficients ``c_1 .. c_{n-1}`` of ``det(lambda - m) = lambda^n + c_1 lambda^{n-1} + ...``."""
    import sympy

    lam = sympy.Symbol("lam")
    poly = sympy.Poly((lam * sympy.eye(m.n) - m.to_sympy()).det(), lam)
    coeffs = poly.all_coeffs()
    return [sympy.expand(c) for c in coeffs[1:-1]]


def is_affine_automorphism(polys: Sequence, symbols: Sequence) -> bool:
    """Each polynomial has degree at most one and the linear part is invertible."""
    import sympy

    if len(polys) != len(symbols):
        return False
    jac = []
    for p in polys:
        poly = sympy.Poly(p, *symbols)
        if poly.total_degree() > 1:
            return False
        jac.append([poly.coeff_monomial(s) for s in symbols])
    return sympy.Matrix(jac).det() != 0


def quasi_section_check(n: int, sigma: Sequence[int] | None = None) -> bool:
    import sympy

    xs = sympy.symbols(f"x1:{n}")
    m = steinberg_section(n, sigma, xs)
    if sympy.simplify(m.det() - 1) != 0:
        return False
    return is_affine_automorphism(characteristic_coefficients(m), xs)


# ---------------------------------------------------------------- twisted Coxeter data


@dataclass(frozen=True)
class TwistedElement:
    """Element ``(g, theta^power)`` of the semidirect product ``SL_n ⋊ <theta>``."""

    matrix: ExactMatrix
    power: int
    theta: GroupAutomorphism = field(compare=False)
    theta_order: int = 2

    def __mul__(self, other: "TwistedElement") -> "TwistedElement":
        h = other.matrix
        for _ in range(self.power):
            h = self.theta(h)
        return TwistedElement(
            self.matrix @ h, (self.power + other.power) % self.theta_order, self.theta, self.theta_order
        )

    def adjoint_character(self):
        phi = self.theta.power(self.power)
        return twisted_adjoint_trace(self.matrix, phi)

    def to_json(self) -> dict:
        return {"matrix": self.matrix.to_json(), "power": self.power}


@dataclass(frozen=True)
class TwistedCoxeterDatum:
    n: int
    section: tuple[int, ...]
    ordering: tuple[int, ...]
    s_dots: dict = field(compare=False, hash=False)
    orbits: tuple[tuple[int, ...], ...] = ()

    def chosen_roots(self) -> list[int]:
        return [self.section[k] for k in self.ordering]


def simple_root_orbits(theta: GroupAutomorphism) -> list[tuple[int, ...]]:
    perm = {i: j for i, (j, _) in pinning_permutation(theta).items()}
    seen, out = set(), []
    for i in sorted(perm):
        if i in seen:
            continue
        orb, j = [], i
        while j not in orb:
            orb.append(j)
            j = perm[j]
        seen.update(orb)
        out.append(tuple(sorted(orb)))
    return out


def twisted_coxeter_datum(theta: GroupAutomorphism, section=None, ordering=None) -> TwistedCoxeterDatum:
    """Datum with representatives built orbitwise: ``s_{theta^k(q)} = theta^k(s_q)``."""
    orbits = simple_root_orbits(theta)
    section = tuple(o[0] for o in orbits) if section is None else tuple(section)
    ordering = tuple(range(len(orbits))) if ordering is None else tuple(ordering)
    if len(section) != len(orbits) or any(q not in o for q, o in zip(section, orbits)):
        raise MatrixGroupError("section must pick one simple root in each orbit")
    if sorted(ordering) != list(range(len(orbits))):
        raise MatrixGroupError("ordering must permute the orbits")
    p = build_pinning(theta.n)
    perm = {i: j for i, (j, _) in pinning_permutation(theta).items()}
    s_dots = {}
    for q in section:
        rep, j = p.s_dot(q), q
        while j not in s_dots:
            s_dots[j] = rep
            rep, j = theta(rep), perm[j]
    datum = TwistedCoxeterDatum(theta.n, section, ordering, s_dots, tuple(orbits))
    if not is_theta_stable(datum, theta):
        raise MatrixGroupError("representatives are not theta-stable")
    return datum


def is_theta_stable(datum: TwistedCoxeterDatum, theta: GroupAutomorphism) -> bool:
    perm = {i: j for i, (j, _) in pinning_permutation(theta).items()}
    return all(theta(s) == datum.s_dots[perm[i]] for i, s in datum.s_dots.items())


def twisted_steinberg_section(
    theta: GroupAutomorphism, datum: TwistedCoxeterDatum, x: Sequence
) -> TwistedElement:
    """``(prod_i u_{q∘sigma(i)}(x_i) s_{q∘sigma(i)}) theta``."""
    if not is_theta_stable(datum, theta):
        raise MatrixGroupError("datum is not theta-stable")
    roots = datum.chosen_roots()
    if len(x) != len(roots):
        raise MatrixGroupError(f"need {len(roots)} coordinates")
    p = build_pinning(theta.n)
    m = ExactMatrix.identity(theta.n)
    for xi, q in zip(x, roots):
        m = m @ p.u(q, xi) @ datum.s_dots[q]
    return TwistedElement(m, 1, theta, theta.order())


@dataclass(frozen=True)
class TwistedCoxeterElement:
    word: tuple[int, ...]
    section: tuple[int, ...]
    ordering: tuple[int, ...]
    matrix: IntegerMatrix
    twisted: bool = True

    def label(self) -> str:
        return "".join(f"s{i + 1}" for i in self.word) + ("θ" if self.twisted else "")


def twisted_coxeter_enumerate(rd: RootDatum, theta, cap: int | None = None) -> list[TwistedCoxeterElement]:
    """All ``s_{q∘sigma(1)} ... s_{q∘sigma(l)} theta`` on the character lattice, deduplicated.

    ``theta`` is a pinned diagram automorphism (see ``folding.pinned_automorphism``).
    """
    cap = bound("TWISTFOLD_COXETER_CAP") if cap is None else cap
    orbits = theta.simple_orbits()
    count = 1
    for k in range(2, len(orbits) + 1):
        count *= k
    for o in orbits:
        count *= len(o)
    if count > cap:
        raise MatrixGroupError(f"{count} candidates exceed the enumeration bound {cap}")
    th = theta.on_characters.matrix
    refl = [rd.reflection_matrix(i) for i in range(rd.semisimple_rank)]
    seen, out = set(), []
    for section in itertools.product(*orbits):
        for ordering in itertools.permutations(range(len(orbits))):
            word = tuple(section[k] for k in ordering)
            m = IntegerMatrix.identity(rd.rank)
            for i in word:
                m = m @ refl[i]
            m = m @ th
            key = m.entries
            if key in seen:
                continue
            seen.add(key)
            out.append(TwistedCoxeterElement(word, tuple(section), ordering, m, not theta.is_identity))
    return out
