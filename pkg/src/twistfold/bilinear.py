"""SL_3 invariants of 3x3 bilinear forms, the associated double-cover spectral data,
and the trace/determinant fibration for 2x2 polynomial matrices."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

P = sympy.Symbol("p")
X0, X1 = sympy.symbols("x0 x1")

Matrix3 = list  # 3x3 list of lists; entries are Fractions or sympy expressions


class BilinearError(ValueError):
    pass


def _is_zero(x) -> bool:
    return sympy.expand(x) == 0 if isinstance(x, sympy.Basic) else x == 0


def _half(x):
    return x / 2 if isinstance(x, sympy.Basic) else Fraction(x) / 2


def det3(m: Matrix3):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def transpose(m: Matrix3) -> Matrix3:
    return [list(r) for r in zip(*m)]


def matmul(a, b):
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(r, c)), 0) for c in cols] for r in a]


def quadratic(g: Matrix3, v: Sequence, w: Sequence | None = None):
    w = v if w is None else w
    return sum((v[i] * g[i][j] * w[j] for i in range(len(v)) for j in range(len(w))), 0)


def nu_tilde(v: Sequence) -> Matrix3:
    """Antisymmetric matrix of ``det(v, -, -)``."""
    return [
        [0, v[2], -v[1]],
        [-v[2], 0, v[0]],
        [v[1], -v[0], 0],
    ]


def nu_tilde_inverse(omega: Matrix3) -> list:
    return [omega[1][2], omega[2][0], omega[0][1]]


@dataclass(frozen=True)
class SymDecomp:
    g: Matrix3
    omega: Matrix3
    v: list

    def reconstruct(self) -> Matrix3:
        return [[self.g[i][j] + self.omega[i][j] for j in range(3)] for i in range(3)]


def decompose(b: Matrix3) -> SymDecomp:
    """Symmetric part, antisymmetric part and the vector representing the latter."""
    g = [[_half(b[i][j] + b[j][i]) for j in range(3)] for i in range(3)]
    omega = [[_half(b[i][j] - b[j][i]) for j in range(3)] for i in range(3)]
    return SymDecomp(g, omega, nu_tilde_inverse(omega))


@dataclass(frozen=True)
class InvariantPair:
    a0: object
    a1: object
    s: object
    t: object

    def as_tuple(self):
        return (self.a0, self.a1, self.s, self.t)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def factored_coefficients(s, t) -> list:
    """Coefficients of ``x0^3, x0^2 x1, x0 x1^2, x1^3`` in ``(x0+x1)(s (x0+x1)^2 + t (x0-x1)^2)``."""
    plus, minus = [1, 1], [1, -1]
    sq_p, sq_m = _poly_mul(plus, plus), _poly_mul(minus, minus)
    inner = [s * a + t * c for a, c in zip(sq_p, sq_m)]
    return _poly_mul(plus, inner)


def pb_coefficients(b: Matrix3) -> list:
    """Coefficients of ``det(x0 B + x1 B^T)`` (descending in x0), from four evaluations."""
    bt = transpose(b)
    vals = []
    for lam in range(4):
        vals.append(det3([[b[i][j] + lam * bt[i][j] for j in range(3)] for i in range(3)]))
    # det(B + lam B^T) = c0 + c1 lam + c2 lam^2 + c3 lam^3; invert the Vandermonde system
    c3 = (vals[3] - 3 * vals[2] + 3 * vals[1] - vals[0]) / 6
    c2 = (vals[2] - 2 * vals[1] + vals[0]) / 2 - 3 * c3
    c1 = vals[1] - vals[0] - c2 - c3
    c0 = vals[0]
    return [c0, c1, c2, c3]


def invariants(b: Matrix3) -> InvariantPair:
    d = decompose(b)
    s = det3(d.g)
    t = quadratic(d.g, d.v)
    coeffs = pb_coefficients(b)
    return InvariantPair(coeffs[0], coeffs[1], s, t)


def identity_holds(b: Matrix3) -> bool:
    """``p_b`` equals the factored form, ``a0 = det B`` and ``a0 = s + t``."""
    inv = invariants(b)
    lhs = pb_coefficients(b)
    rhs = factored_coefficients(inv.s, inv.t)
    return (
        all(_is_zero(x - y) for x, y in zip(lhs, rhs))
        and _is_zero(inv.a0 - det3(b))
        and _is_zero(inv.a0 - inv.s - inv.t)
        and _is_zero(lhs[1] - lhs[2])
        and _is_zero(lhs[0] - lhs[3])
    )


def congruent(b: Matrix3, a: Matrix3) -> Matrix3:
    return matmul(matmul(transpose(a), b), a)


def sl3_invariance_check(b: Matrix3, a: Matrix3) -> bool:
    if not _is_zero(det3(a) - 1):
        raise BilinearError("change of basis must have determinant 1")
    x, y = invariants(b), invariants(congruent(b, a))
    return all(_is_zero(p - q) for p, q in zip(x.as_tuple(), y.as_tuple()))


def random_rational_form(rng: random.Random, spread: int = 5) -> Matrix3:
    return [[Fraction(rng.randint(-spread, spread), rng.randint(1, 3)) for _ in range(3)] for _ in range(3)]


def random_sl3(rng: random.Random, steps: int = 5) -> Matrix3:
    """Random element of SL_3(Q) built from elementary and unimodular diagonal factors."""
    m = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    for _ in range(steps):
        i, j = rng.sample(range(3), 2)
        e = [[Fraction(int(r == c)) for c in range(3)] for r in range(3)]
        e[i][j] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        m = matmul(m, e)
    d1, d2 = Fraction(rng.choice([1, 2, 3]), rng.choice([1, 2])), Fraction(rng.choice([1, -1]))
    return matmul(m, [[d1, 0, 0], [0, d2, 0], [0, 0, 1 / (d1 * d2)]])


# ---------------------------------------------------------------- spectral curve


@dataclass(frozen=True)
class SpectralPoly:
    s: sympy.Poly
    t: sympy.Poly
    smooth: bool
    branch_polynomial: sympy.Poly
    reasons: tuple = ()

    def sigma(self, p, y0, y1):
        return self.s.eval(p) * y0**2 + self.t.eval(p) * y1**2

    def to_json(self) -> dict:
        return {
            "s": str(self.s.as_expr()),
            "t": str(self.t.as_expr()),
            "smooth": self.smooth,
            "branch": str(self.branch_polynomial.as_expr()),
            "reasons": list(self.reasons),
        }


def as_poly(x) -> sympy.Poly:
    return x if isinstance(x, sympy.Poly) else sympy.Poly(sympy.sympify(x), P, domain="QQ")


def _squarefree(f: sympy.Poly) -> bool:
    return f.degree() <= 0 or sympy.gcd(f, f.diff(P)).degree() == 0


def spectral_poly(s, t, degree_bound: int | None = None) -> SpectralPoly:
    """``sigma = s y0^2 + t y1^2`` on one affine chart with the smoothness verdict.

    Smooth iff ``gcd(s, t) = 1`` and both are squarefree; a vanishing ``s`` or ``t``
    makes the curve non-reduced.
    """
    s, t = as_poly(s), as_poly(t)
    if s.is_zero and t.is_zero:
        raise BilinearError("s and t cannot both vanish")
    if degree_bound is not None and max(s.degree(), t.degree()) > degree_bound:
        raise BilinearError(f"degree exceeds the bound {degree_bound}")
    reasons = []
    if s.is_zero or t.is_zero:
        reasons.append("non-reduced: one coefficient vanishes identically")
    else:
        if sympy.gcd(s, t).degree() > 0:
            reasons.append("s and t share a zero")
        if not _squarefree(s):
            reasons.append("s has a repeated zero")
        if not _squarefree(t):
            reasons.append("t has a repeated zero")
    return SpectralPoly(s, t, not reasons, s * t, tuple(reasons))


def spectral_points(sp: SpectralPoly, p) -> list[tuple]:
    """Solutions ``(y0 : y1)`` over the sample point, as exact sympy numbers."""
    a, c = sp.s.eval(p), sp.t.eval(p)
    if a == 0 and c == 0:
        return [None]
    if c == 0:
        return [(0, 1)]
    if a == 0:
        return [(1, 0)]
    y1 = sympy.sqrt(-a / c)
    return [(1, y1), (1, -y1)]


# ---------------------------------------------------------------- forward spectral data


def _solve3(cols, rhs):
    m = [[cols[j][i] for j in range(3)] for i in range(3)]
    d = det3(m)
    out = []
    for k in range(3):
        mk = [[rhs[i] if j == k else m[i][j] for j in range(3)] for i in range(3)]
        out.append(det3(mk) / d)
    return out


def orthogonal_complement_basis(g: Matrix3, v: Sequence) -> list[list]:
    """Two vectors spanning ``{w : g(v, w) = 0}`` (assumes ``g(v, v) != 0``)."""
    gvv = quadratic(g, v)
    cands = []
    for k in range(3):
        e = [Fraction(int(i == k)) for i in range(3)]
        c = quadratic(g, v, e) / gvv
        cands.append([ei - c * vi for ei, vi in zip(e, v)])
    for i in range(3):
        for j in range(i + 1, 3):
            if det3([list(v), cands[i], cands[j]]) != 0:
                return [cands[i], cands[j]]
    raise BilinearError("degenerate complement")


@dataclass(frozen=True)
class PointSpectralData:
    p: Fraction
    phi_t: list
    phi_s: list | None
    trace: Fraction
    det: Fraction
    expected_det: Fraction

    def ok(self) -> bool:
        return self.trace == 0 and self.det == self.expected_det

    def to_json(self) -> dict:
        return {
            "p": _q(self.p),
            "trace": _q(self.trace),
            "det": _q(self.det),
            "expected_det": _q(self.expected_det),
        }


def _q(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _inv2(m):
    d = _det2(m)
    return [[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]]


def phi_at_point(g: Matrix3, v: Sequence) -> list:
    """``eta~^{-1} ∘ h`` on ``E = V / <v>``, identified with the g-orthogonal complement of ``v``."""
    g = [[Fraction(x) for x in r] for r in g]
    v = [Fraction(x) for x in v]
    if all(x == 0 for x in v):
        raise BilinearError("v_omega vanishes at the sample")
    if quadratic(g, v) == 0:
        raise BilinearError("sample lies on the zero set of t")
    w1, w2 = orthogonal_complement_basis(g, v)
    h = [[quadratic(g, a, b) for b in (w1, w2)] for a in (w1, w2)]
    c = det3([v, w1, w2])
    eta = [[0, c], [-c, 0]]  # eta(w_i, w_j) = det(v, w_i, w_j)
    eta_t_inv = _inv2([[eta[j][i] for j in range(2)] for i in range(2)])
    return [[sum(eta_t_inv[i][k] * h[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


@dataclass(frozen=True)
class SpectralReport:
    s: sympy.Poly
    t: sympy.Poly
    identity_ok: bool
    samples: list = field(default_factory=list)

    def ok(self) -> bool:
        return self.identity_ok and all(x.ok() for x in self.samples)

    def to_json(self) -> dict:
        return {
            "s": str(self.s.as_expr()),
            "t": str(self.t.as_expr()),
            "identity_ok": self.identity_ok,
            "samples": [x.to_json() for x in self.samples],
        }


def forward_spectral_data(g: Matrix3, v: Sequence, samples: Sequence, with_phi_s: bool = True) -> SpectralReport:
    """Pointwise ``Phi_t`` (and ``Phi_s``) at rational samples for polynomial ``g`` and ``v``."""
    g = [[sympy.sympify(e) for e in r] for r in g]
    v = [sympy.sympify(e) for e in v]
    s = as_poly(sympy.expand(det3(g)))
    t = as_poly(sympy.expand(quadratic(g, v)))
    gpoly = [[as_poly(e) for e in r] for r in g]
    vpoly = [as_poly(e) for e in v]
    identity_ok = polynomial_identity_holds(gpoly, vpoly)
    out = []
    for p in samples:
        p = Fraction(p)
        gp = [[_poly_at(e, p) for e in r] for r in gpoly]
        vp = [_poly_at(e, p) for e in vpoly]
        sp, tp = _poly_at(s, p), _poly_at(t, p)
        if tp == 0:
            raise BilinearError(f"sample {p} is a zero of t")
        phi = phi_at_point(gp, vp)
        phi_s = None
        if with_phi_s:
            if sp == 0:
                raise BilinearError(f"sample {p} is a zero of s")
            phi_s = _inv2(phi)
        out.append(PointSpectralData(p, phi, phi_s, phi[0][0] + phi[1][1], _det2(phi), sp / tp))
    return SpectralReport(s, t, identity_ok, out)


def _poly_at(f: sympy.Poly, p: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in f.all_coeffs():
        acc = acc * p + Fraction(int(c.p), int(c.q))
    return acc


def polynomial_identity_holds(gpoly, vpoly) -> bool:
    """The form identities for ``B(p) = g(p) + nu~(v(p))`` as polynomial identities in ``p``.

    Every quantity involved has degree at most ``3 d`` in ``p`` (``d`` the largest entry
    degree), so agreement at ``3 d + 1`` distinct points is a proof.
    """
    d = max([max(f.degree(), 0) for r in gpoly for f in r] + [max(f.degree(), 0) for f in vpoly])
    for k in range(3 * d + 1):
        x = Fraction(k)
        gp = [[_poly_at(f, x) for f in r] for r in gpoly]
        om = nu_tilde([_poly_at(f, x) for f in vpoly])
        if not identity_holds([[gp[i][j] + om[i][j] for j in range(3)] for i in range(3)]):
            return False
    return True


def random_polynomial_instance(rng: random.Random, degree: int = 1, spread: int = 3):
    """Symmetric ``g`` and vector ``v`` with integer polynomial entries in ``p``."""

    def rp():
        return sum(rng.randint(-spread, spread) * P**k for k in range(degree + 1))

    g = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i, 3):
            g[i][j] = g[j][i] = rp()
    v = [rp() for _ in range(3)]
    return g, v


def admissible_samples(g, v, count: int, rng: random.Random, spread: int = 40) -> list[Fraction]:
    s = as_poly(sympy.expand(det3([[sympy.sympify(e) for e in r] for r in g])))
    t = as_poly(sympy.expand(quadratic([[sympy.sympify(e) for e in r] for r in g], [sympy.sympify(e) for e in v])))
    if s.is_zero or t.is_zero:
        return []
    vs = [as_poly(e) for e in v]
    out, tries = [], 0
    while len(out) < count and tries < 50 * count:
        tries += 1
        p = Fraction(rng.randint(-spread, spread), rng.randint(1, 4))
        if p in out or _poly_at(s, p) == 0 or _poly_at(t, p) == 0:
            continue
        if all(_poly_at(f, p) == 0 for f in vs):
            continue
        out.append(p)
    return out


# ---------------------------------------------------------------- compatibility


def compatibility_check(t, s, data: dict) -> bool:
    """``s(p) = psi(p)^T h'(p) psi(p)`` at each supplied simple zero ``p`` of ``t``.

    ``data`` maps each point to ``(psi, h_prime)``.
    """
    t, s = as_poly(t), as_poly(s)
    dt = t.diff(P)
    for p, (psi, hp) in data.items():
        p = Fraction(p)
        if _poly_at(t, p) != 0:
            raise BilinearError(f"{p} is not a zero of t")
        if _poly_at(dt, p) == 0:
            raise BilinearError(f"{p} is not a simple zero of t")
    return all(
        _poly_at(s, Fraction(p)) == quadratic([[Fraction(x) for x in r] for r in hp], [Fraction(x) for x in psi])
        for p, (psi, hp) in data.items()
    )


# ---------------------------------------------------------------- SL_2 fibration


@dataclass(frozen=True)
class FibrationReport:
    a: sympy.Poly
    b: sympy.Poly
    discriminant: sympy.Poly
    affine_branch_points: int
    branch_at_infinity: bool
    genus: int
    prym_dimension: int

    def to_json(self) -> dict:
        return {
            "a": str(self.a.as_expr()),
            "b": str(self.b.as_expr()),
            "discriminant": str(self.discriminant.as_expr()),
            "affine_branch_points": self.affine_branch_points,
            "branch_at_infinity": self.branch_at_infinity,
            "genus": self.genus,
            "prym_dimension": self.prym_dimension,
        }


def sl2_fibration(phi) -> FibrationReport:
    """Trace and determinant of a 2x2 polynomial matrix, with its branch data.

    The double cover ``y^2 + a y + b = 0`` of the projective line branches at the
    odd-multiplicity zeros of ``a^2 - 4b``, plus infinity when the degree is odd.
    Genus follows from Riemann-Hurwitz for a double cover of a rational curve.
    """
    a = as_poly(sympy.expand(phi[0][0] + phi[1][1]))
    b = as_poly(sympy.expand(phi[0][0] * phi[1][1] - phi[0][1] * phi[1][0]))
    disc = a**2 - b * 4
    if disc.is_zero:
        raise BilinearError("a^2 - 4b vanishes identically")
    odd = 0
    for factor, mult in sympy.sqf_list(disc)[1]:
        if mult % 2:
            odd += factor.degree()
    at_inf = disc.degree() % 2 == 1
    branch = odd + int(at_inf)
    genus = max(branch // 2 - 1, 0)
    return FibrationReport(a, b, disc, odd, at_inf, genus, genus)


def companion(a, b):
    return [[0, -b], [1, a]]
