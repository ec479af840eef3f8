"""Exact integer lattice arithmetic.

Smith normal form with unimodular witnesses, cokernels presented as finite
abelian groups plus a free part, and the invariants/coinvariants of a
finite-order automorphism of ``Z^n``. Every entry is a Python ``int``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, prod
from typing import Iterable, Sequence

Row = tuple[int, ...]


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable integer matrix stored row-major."""

    entries: tuple[Row, ...]
    ncols: int

    def __init__(self, entries: Iterable[Iterable[int]], ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in r) for r in entries)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "ncols", ncols)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntegerMatrix":
        return cls([[0] * n for _ in range(m)], n)

    @classmethod
    def diagonal(cls, diag: Sequence[int]) -> "IntegerMatrix":
        n = len(diag)
        return cls([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Row:
        return self.entries[i]

    def col(self, j: int) -> Row:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix([self.col(j) for j in range(self.ncols)], self.nrows)

    T = property(transpose)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.col(j) for j in range(other.ncols)]
        return IntegerMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries],
            other.ncols,
        )

    def __add__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        return IntegerMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.ncols,
        )

    def __sub__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        return IntegerMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.ncols,
        )

    def __neg__(self) -> "IntegerMatrix":
        return IntegerMatrix([[-a for a in r] for r in self.entries], self.ncols)

    def scale(self, c: int) -> "IntegerMatrix":
        return IntegerMatrix([[c * a for a in r] for r in self.entries], self.ncols)

    def apply(self, v: Sequence[int]) -> Row:
        """Matrix times column vector."""
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def __pow__(self, k: int) -> "IntegerMatrix":
        if self.nrows != self.ncols or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        result = IntegerMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("det of non-square matrix")
        if n == 0:
            return 1
        a = [list(r) for r in self.entries]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_diagonal(self) -> bool:
        return all(
            self.entries[i][j] == 0
            for i in range(self.nrows)
            for j in range(self.ncols)
            if i != j
        )

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.tolist()})"


def as_matrix(m: IntegerMatrix | Sequence[Sequence[int]]) -> IntegerMatrix:
    return m if isinstance(m, IntegerMatrix) else IntegerMatrix(m)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z/d_1 + ... + Z/d_k + Z^free_rank`` with ``d_1 | d_2 | ... | d_k``, each ``d_i >= 2``."""

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        ds = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", ds)
        if any(d < 2 for d in ds):
            raise ValueError(f"invariant factors must be >= 2: {ds}")
        if any(b % a for a, b in zip(ds, ds[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain: {ds}")
        if self.free_rank < 0:
            raise ValueError("negative free rank")

    @classmethod
    def from_orders(cls, orders: Iterable[int], free_rank: int = 0) -> "FiniteAbelianGroup":
        """Normalize any list of cyclic orders (0 meaning a copy of Z) to invariant factors."""
        torsion = []
        for d in orders:
            d = abs(int(d))
            if d == 0:
                free_rank += 1
            elif d > 1:
                torsion.append(d)
        return cls(_invariant_factors_of(torsion), free_rank)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        return cls.from_orders([n])

    @classmethod
    def trivial(cls) -> "FiniteAbelianGroup":
        return cls()

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def torsion_free(self) -> bool:
        return not self.invariant_factors

    def order(self) -> int:
        if self.free_rank:
            raise ValueError("infinite group has no finite order")
        return prod(self.invariant_factors)

    def __add__(self, other: "FiniteAbelianGroup") -> "FiniteAbelianGroup":
        return FiniteAbelianGroup.from_orders(
            self.invariant_factors + other.invariant_factors,
            self.free_rank + other.free_rank,
        )

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors), "free_rank": self.free_rank}


def _invariant_factors_of(orders: Sequence[int]) -> tuple[int, ...]:
    """Invariant factors of a direct sum of finite cyclic groups, via primary parts."""
    by_prime: dict[int, list[int]] = {}
    for n in orders:
        for p, e in _factorize(n).items():
            by_prime.setdefault(p, []).append(p**e)
    if not by_prime:
        return ()
    length = max(len(v) for v in by_prime.values())
    factors = [1] * length
    for powers in by_prime.values():
        powers.sort()
        for k, q in enumerate(powers):
            factors[length - len(powers) + k] *= q
    return tuple(f for f in factors if f > 1)


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def smith_normal_form(
    m: IntegerMatrix | Sequence[Sequence[int]],
) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Return ``(U, D, V)`` with ``D = U @ M @ V`` in Smith normal form.

    ``U`` and ``V`` are unimodular; ``D`` is diagonal with nonnegative entries
    and each diagonal entry divides the next.
    """
    m = as_matrix(m)
    rows, cols = m.shape
    a = [list(r) for r in m.entries]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        if c:
            a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
            u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, c):
        if c:
            for r in a:
                r[dst] += c * r[src]
            for r in v:
                r[dst] += c * r[src]

    t = 0
    while t < min(rows, cols):
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < best):
                    best, pivot = abs(a[i][j]), (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # pivot must divide the remaining block
            bad = next(
                (
                    (i, j)
                    for i in range(t + 1, rows)
                    for j in range(t + 1, cols)
                    if a[i][j] % a[t][t]
                ),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    return IntegerMatrix(u, rows), IntegerMatrix(a, cols), IntegerMatrix(v, cols)


def _smith_diagonal(m: IntegerMatrix) -> list[int]:
    _, d, _ = smith_normal_form(m)
    return [d[i, i] for i in range(min(d.shape))]


def cokernel(f: IntegerMatrix | Sequence[Sequence[int]]) -> FiniteAbelianGroup:
    """``Z^m / image(f)`` for ``f: Z^n -> Z^m`` given as an ``m x n`` matrix."""
    f = as_matrix(f)
    diag = _smith_diagonal(f)
    nonzero = [d for d in diag if d]
    torsion = [d for d in nonzero if d > 1]
    return FiniteAbelianGroup(tuple(torsion), f.nrows - len(nonzero))


def kernel_basis(f: IntegerMatrix | Sequence[Sequence[int]]) -> list[Row]:
    """A ``Z``-basis of ``{x in Z^n : f x = 0}``, as saturated integer vectors."""
    f = as_matrix(f)
    _, d, v = smith_normal_form(f)
    r = sum(1 for i in range(min(d.shape)) if d[i, i])
    return [v.col(j) for j in range(r, f.ncols)]


def image_saturation_index(f: IntegerMatrix) -> int:
    """Index of image(f) in its saturation (product of nonzero Smith invariants)."""
    return prod(d for d in _smith_diagonal(f) if d)


@dataclass(frozen=True)
class LatticeAutomorphism:
    """Finite-order automorphism of ``Z^rank`` acting on column vectors."""

    matrix: IntegerMatrix
    order: int

    def __post_init__(self):
        n, k = self.matrix.shape
        if n != k:
            raise ValueError("automorphism matrix must be square")
        if self.matrix.det() not in (1, -1):
            raise ValueError("automorphism must have determinant +-1")
        if self.order < 1 or self.matrix**self.order != IntegerMatrix.identity(n):
            raise ValueError(f"matrix does not have order dividing {self.order}")

    @classmethod
    def of(cls, matrix, max_order: int = 64) -> "LatticeAutomorphism":
        """Build from a matrix, computing its exact order."""
        m = as_matrix(matrix)
        ident = IntegerMatrix.identity(m.nrows)
        p = m
        for k in range(1, max_order + 1):
            if p == ident:
                return cls(m, k)
            p = p @ m
        raise ValueError("matrix has no finite order below the search bound")

    @property
    def rank(self) -> int:
        return self.matrix.nrows


def automorphism_invariants(
    theta: LatticeAutomorphism,
) -> tuple[list[Row], FiniteAbelianGroup]:
    """Fixed sublattice basis and coinvariant group ``Z^n / (1 - theta)``."""
    n = theta.rank
    one_minus = IntegerMatrix.identity(n) - theta.matrix
    return kernel_basis(one_minus), cokernel(one_minus)


def gcd_all(xs: Iterable[int]) -> int:
    return reduce(gcd, (abs(x) for x in xs), 0)


def row_lattice_basis(gens: Sequence[Sequence[int]], dim: int) -> list[Row]:
    """A basis of the sublattice of ``Z^dim`` spanned by ``gens``."""
    if not gens:
        return []
    m = IntegerMatrix(gens, dim)
    u, d, _ = smith_normal_form(m)
    r = sum(1 for i in range(min(d.shape)) if d[i, i])
    um = u @ m
    return [um.row(i) for i in range(r)]


def coordinates(vec: Sequence[int], basis: Sequence[Sequence[int]]) -> tuple:
    """Exact coefficients ``c`` with ``sum c_j basis_j == vec``; raises if ``vec`` is outside the span."""
    from fractions import Fraction

    k = len(basis)
    n = len(vec)
    # augmented system with basis vectors as columns
    rows = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(vec[i])] for i in range(n)]
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, n)):
        raise ValueError("vector not in the span of the basis")
    if len(piv_cols) != k:
        raise ValueError("basis vectors are linearly dependent")
    out = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        out[c] = rows[i][k]
    return tuple(int(x) if x.denominator == 1 else x for x in out)
