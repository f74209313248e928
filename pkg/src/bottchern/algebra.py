"""Exact linear algebra over the Gaussian rationals Q(i).

Everything downstream is a dimension count, so ranks must be exact.
Matrices are small (at most 20x20 for complex dimension 3) and dense.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, ParseError

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (optional leading minus) into a Fraction."""
    if not isinstance(text, str) or not _RATIONAL.match(text):
        raise ParseError(f"malformed rational literal: {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class GaussianRational:
    """Exact scalar ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(x)

    @classmethod
    def parse(cls, re: str, im: str = "0") -> "GaussianRational":
        return cls(parse_rational(re), parse_rational(im))

    def to_strings(self) -> list[str]:
        return [format_rational(self.re), format_rational(self.im)]

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __add__(self, other):
        o = other if isinstance(other, GaussianRational) else GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if isinstance(other, GaussianRational) else GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = other if isinstance(other, GaussianRational) else GaussianRational.coerce(other)
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussianRational(a * c, b)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = other if isinstance(other, GaussianRational) else GaussianRational.coerce(other)
        c, d = o.re, o.im
        norm = c * c + d * d
        if not norm:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b = self.re, self.im
        return GaussianRational((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return self == GaussianRational.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return f"GQ({format_rational(self.re)})"
        return f"GQ({format_rational(self.re)}, {format_rational(self.im)})"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


class Matrix:
    """Immutable dense matrix, row-major entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable | None = None):
        if rows < 0 or cols < 0:
            raise DimensionError("negative matrix shape")
        if entries is None:
            data = (ZERO,) * (rows * cols)
        else:
            data = tuple(GaussianRational.coerce(x) for x in entries)
        if len(data) != rows * cols:
            raise DimensionError(f"expected {rows * cols} entries, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self.entries = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        if any(len(c) != rows for c in columns):
            raise DimensionError("column length mismatch")
        return cls(rows, len(columns), [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.rows else ()

    def to_rows(self) -> list[list[GaussianRational]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def conjugate(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [x.conj() for x in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = ZERO
                for k, a in enumerate(r):
                    if a:
                        b = other.entries[k * other.cols + j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return Matrix(self.rows, other.cols, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [x.to_strings() for x in self.entries]}

    @classmethod
    def from_json(cls, doc: dict) -> "Matrix":
        try:
            return cls(doc["rows"], doc["cols"],
                       [GaussianRational.parse(re, im) for re, im in doc["entries"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed matrix document: {exc}") from exc


def _echelon(m: Matrix) -> tuple[list[list[GaussianRational]], list[int]]:
    """Reduced row echelon form by fraction-preserving elimination."""
    a = m.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        piv = next((i for i in range(r, m.rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = ONE / a[r][c]
        a[r] = [x * inv if x else x for x in a[r]]
        for i in range(m.rows):
            f = a[i][c]
            if i != r and f:
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_echelon(m)[1])


def kernel_dim(m: Matrix) -> int:
    return m.cols - rank(m)


def pivot_columns(m: Matrix) -> list[int]:
    """Indices of the leftmost maximal linearly independent set of columns."""
    if m.rows == 0 or m.cols == 0:
        return []
    return _echelon(m)[1]


def nullspace(m: Matrix) -> list[tuple[GaussianRational, ...]]:
    """Basis of ker m, one vector per free column, in column order."""
    if m.rows == 0:
        return [tuple(ONE if i == j else ZERO for i in range(m.cols)) for j in range(m.cols)]
    a, pivots = _echelon(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -a[r][f]
        basis.append(tuple(v))
    return basis


def vstack(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.cols:
        raise DimensionError(f"vstack: column counts differ ({a.cols} vs {b.cols})")
    return Matrix(a.rows + b.rows, a.cols, a.entries + b.entries)


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows:
        raise DimensionError(f"hstack: row counts differ ({a.rows} vs {b.rows})")
    out = []
    for i in range(a.rows):
        out.extend(a.row(i))
        out.extend(b.row(i))
    return Matrix(a.rows, a.cols + b.cols, out)
