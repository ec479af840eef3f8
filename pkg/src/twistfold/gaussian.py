"""Exact Gaussian rationals ``a + b i`` with ``a, b`` in Q, and small dense matrices over them."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Sequence


class GQ:
    """Element of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GQ):
            re, im = re.re, re.im + Fraction(im)
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, *_):
        raise AttributeError("GQ is immutable")

    @staticmethod
    def coerce(x) -> "GQ":
        if isinstance(x, GQ):
            return x
        if isinstance(x, (int, Fraction, Rational)):
            return GQ(x)
        if isinstance(x, complex):
            return GQ(Fraction(x.real), Fraction(x.imag))
        raise TypeError(f"cannot coerce {type(x).__name__} to GQ")

    def __add__(self, o):
        try:
            o = GQ.coerce(o)
        except TypeError:
            return NotImplemented
        return GQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GQ(-self.re, -self.im)

    def __sub__(self, o):
        try:
            o = GQ.coerce(o)
        except TypeError:
            return NotImplemented
        return GQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        try:
            o = GQ.coerce(o)
        except TypeError:
            return NotImplemented
        return GQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GQ":
        return GQ(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GQ":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GQ division by zero")
        return GQ(self.re / n, -self.im / n)

    def __truediv__(self, o):
        try:
            o = GQ.coerce(o)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        return GQ.coerce(o) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = GQ(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, o):
        try:
            o = GQ.coerce(o)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GQ({self})"

    def __str__(self):
        if not self.im:
            return _frac(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{_frac(self.re)}{sign}{_frac(abs(self.im))}*i"

    def to_json(self) -> str:
        return str(self)

    @classmethod
    def parse(cls, s: str) -> "GQ":
        m = re.fullmatch(r"\s*(-?\d+)/(\d+)(?:([+-])(\d+)/(\d+)\*i)?\s*", s)
        if not m:
            raise ValueError(f"not an exact number string: {s!r}")
        re_ = Fraction(int(m.group(1)), int(m.group(2)))
        im = Fraction(0)
        if m.group(3):
            im = Fraction(int(m.group(4)), int(m.group(5)))
            if m.group(3) == "-":
                im = -im
        return cls(re_, im)

    def to_sympy(self):
        import sympy

        return sympy.Rational(self.re.numerator, self.re.denominator) + sympy.I * sympy.Rational(
            self.im.numerator, self.im.denominator
        )

    _sympy_ = to_sympy


I = GQ(0, 1)


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _is_symbolic(x) -> bool:
    return type(x).__module__.startswith("sympy")


class ExactMatrix:
    """Square or rectangular matrix with exact entries (``GQ`` or sympy expressions)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        object.__setattr__(
            self,
            "rows",
            tuple(tuple(e if _is_symbolic(e) else GQ.coerce(e) for e in r) for r in rows),
        )

    def __setattr__(self, *_):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "ExactMatrix":
        return cls([[0] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int, c=1) -> "ExactMatrix":
        """``c * E_{ij}`` with 1-based indices."""
        return cls([[c if (a, b) == (i - 1, j - 1) else 0 for b in range(n)] for a in range(n)])

    @classmethod
    def diag(cls, entries: Sequence) -> "ExactMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def antidiag(cls, entries: Sequence) -> "ExactMatrix":
        n = len(entries)
        return cls([[entries[i] if i + j == n - 1 else 0 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def map(self, f: Callable) -> "ExactMatrix":
        return ExactMatrix([[f(e) for e in r] for r in self.rows])

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows)))

    def __matmul__(self, o: "ExactMatrix") -> "ExactMatrix":
        cols = list(zip(*o.rows))
        return ExactMatrix([[_dot(r, c) for c in cols] for r in self.rows])

    def __add__(self, o):
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)])

    def __sub__(self, o):
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)])

    def __neg__(self):
        return self.map(lambda e: -e)

    def scale(self, c) -> "ExactMatrix":
        return self.map(lambda e: c * e)

    def trace(self):
        out = 0
        for i in range(self.n):
            out = out + self.rows[i][i]
        return out

    def is_symbolic(self) -> bool:
        return any(_is_symbolic(e) for r in self.rows for e in r)

    def det(self):
        if self.is_symbolic():
            return self.to_sympy().det()
        a = [list(r) for r in self.rows]
        n = len(a)
        det = GQ(1)
        for k in range(n):
            p = next((i for i in range(k, n) if a[i][k]), None)
            if p is None:
                return GQ(0)
            if p != k:
                a[k], a[p] = a[p], a[k]
                det = -det
            det = det * a[k][k]
            inv = a[k][k].inverse()
            for i in range(k + 1, n):
                if a[i][k]:
                    f = a[i][k] * inv
                    a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        return det

    def inverse(self) -> "ExactMatrix":
        if self.is_symbolic():
            return ExactMatrix(self.to_sympy().inv().tolist())
        n = self.n
        a = [list(r) + [GQ(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        for k in range(n):
            p = next((i for i in range(k, n) if a[i][k]), None)
            if p is None:
                raise ZeroDivisionError("singular matrix")
            a[k], a[p] = a[p], a[k]
            inv = a[k][k].inverse()
            a[k] = [x * inv for x in a[k]]
            for i in range(n):
                if i != k and a[i][k]:
                    f = a[i][k]
                    a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        return ExactMatrix([r[n:] for r in a])

    def __pow__(self, k: int) -> "ExactMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ExactMatrix.identity(self.n), self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def __eq__(self, o):
        if not isinstance(o, ExactMatrix):
            return NotImplemented
        if self.shape != o.shape:
            return False
        if self.is_symbolic() or o.is_symbolic():
            import sympy

            return all(
                sympy.simplify(sympy.sympify(_sym(a)) - _sym(b)) == 0
                for r, s in zip(self.rows, o.rows)
                for a, b in zip(r, s)
            )
        return self.rows == o.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ExactMatrix({[[str(e) for e in r] for r in self.rows]})"

    def to_sympy(self):
        import sympy

        return sympy.Matrix([[_sym(e) for e in r] for r in self.rows])

    def to_json(self) -> list:
        return [[str(e) if isinstance(e, GQ) else str(e) for e in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "ExactMatrix":
        return cls([[GQ.parse(s) for s in r] for r in data])


def _sym(e):
    return e.to_sympy() if isinstance(e, GQ) else e


def _dot(r, c):
    out = 0
    for a, b in zip(r, c):
        if isinstance(a, GQ) and not a:
            continue
        if isinstance(b, GQ) and not b:
            continue
        out = out + a * b
    return out if not isinstance(out, int) else GQ(out)
