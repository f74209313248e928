"""Bounded double complexes with an optional anti-linear conjugation, and their totalization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .algebra import Matrix, rank
from .errors import DimensionError, InvalidComplexError, ParseError

Bidegree = tuple[int, int]


@dataclass(frozen=True)
class DoubleComplex:
    """Cells A^{p,q}, 0 <= p,q <= n, with del of bidegree (1,0) and delbar of bidegree (0,1).

    ``partial[(p, q)]`` is the matrix of del: A^{p,q} -> A^{p+1,q} (columns index the
    source basis). Absent maps are zero. ``sigma[(p, q)]`` is the matrix M of the
    conjugation A^{p,q} -> A^{q,p}, acting as x -> M @ conj(x).
    """

    n: int
    cells: dict[Bidegree, int]
    partial: dict[Bidegree, Matrix] = field(default_factory=dict)
    partial_bar: dict[Bidegree, Matrix] = field(default_factory=dict)
    sigma: dict[Bidegree, Matrix] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise DimensionError("complex dimension must be nonnegative")
        for (p, q), d in self.cells.items():
            if not self.in_range(p, q) or d < 0:
                raise DimensionError(f"bad cell ({p},{q}) of dimension {d}")
        for name, maps, (dp, dq) in (("del", self.partial, (1, 0)), ("delbar", self.partial_bar, (0, 1))):
            for (p, q), m in maps.items():
                want = (self.dim(p + dp, q + dq), self.dim(p, q))
                if m.shape != want:
                    raise DimensionError(f"{name} at ({p},{q}) has shape {m.shape}, expected {want}")
        if self.sigma is not None:
            for (p, q), m in self.sigma.items():
                if m.shape != (self.dim(q, p), self.dim(p, q)):
                    raise DimensionError(f"sigma at ({p},{q}) has shape {m.shape}")

    def in_range(self, p: int, q: int) -> bool:
        return 0 <= p <= self.n and 0 <= q <= self.n

    def dim(self, p: int, q: int) -> int:
        return self.cells.get((p, q), 0) if self.in_range(p, q) else 0

    def bidegrees(self) -> list[Bidegree]:
        return [(p, q) for p in range(self.n + 1) for q in range(self.n + 1)]

    def total_dim(self) -> int:
        return sum(self.dim(p, q) for p, q in self.bidegrees())

    def del_at(self, p: int, q: int) -> Matrix:
        m = self.partial.get((p, q))
        return m if m is not None else Matrix.zeros(self.dim(p + 1, q), self.dim(p, q))

    def delbar_at(self, p: int, q: int) -> Matrix:
        m = self.partial_bar.get((p, q))
        return m if m is not None else Matrix.zeros(self.dim(p, q + 1), self.dim(p, q))

    def ddbar_at(self, p: int, q: int) -> Matrix:
        """del delbar: A^{p,q} -> A^{p+1,q+1}."""
        return self.del_at(p, q + 1) @ self.delbar_at(p, q)

    def sigma_at(self, p: int, q: int) -> Matrix | None:
        if self.sigma is None:
            return None
        return self.sigma.get((p, q), Matrix.zeros(self.dim(q, p), self.dim(p, q)))

    # serialization

    def to_json(self) -> dict:
        def maps(d):
            return {f"{p},{q}": m.to_json() for (p, q), m in sorted(d.items())}

        doc = {
            "n": self.n,
            "cells": [[self.dim(p, q) for q in range(self.n + 1)] for p in range(self.n + 1)],
            "del": maps(self.partial),
            "delbar": maps(self.partial_bar),
        }
        if self.sigma is not None:
            doc["sigma"] = maps(self.sigma)
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, doc: dict) -> "DoubleComplex":
        def maps(d):
            out = {}
            for key, m in d.items():
                p, q = (int(x) for x in key.split(","))
                out[(p, q)] = Matrix.from_json(m)
            return out

        try:
            n = doc["n"]
            cells = {(p, q): doc["cells"][p][q] for p in range(n + 1) for q in range(n + 1)}
            sigma = maps(doc["sigma"]) if "sigma" in doc else None
            return cls(n, cells, maps(doc.get("del", {})), maps(doc.get("delbar", {})), sigma)
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed double complex document: {exc}") from exc

    @classmethod
    def loads(cls, text: str) -> "DoubleComplex":
        try:
            return cls.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from exc


@dataclass(frozen=True)
class JacobiCheck:
    identity: str
    cell: Bidegree
    ok: bool


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[JacobiCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[JacobiCheck]:
        return [c for c in self.checks if not c.ok]

    def describe(self) -> str:
        if self.ok:
            return "all identities hold"
        return "; ".join(f"{c.identity} != 0 on A^{{{c.cell[0]},{c.cell[1]}}}" for c in self.failures)


def validate_jacobi(k: DoubleComplex) -> ValidationReport:
    """Check del^2 = 0, delbar^2 = 0 and del delbar + delbar del = 0 on every cell."""
    checks = []
    for p, q in k.bidegrees():
        dd = k.del_at(p + 1, q) @ k.del_at(p, q)
        bb = k.delbar_at(p, q + 1) @ k.delbar_at(p, q)
        mixed = k.del_at(p, q + 1) @ k.delbar_at(p, q) + k.delbar_at(p + 1, q) @ k.del_at(p, q)
        checks.append(JacobiCheck("del^2", (p, q), dd.is_zero()))
        checks.append(JacobiCheck("delbar^2", (p, q), bb.is_zero()))
        checks.append(JacobiCheck("del delbar + delbar del", (p, q), mixed.is_zero()))
    return ValidationReport(tuple(checks))


def validate_conjugation(k: DoubleComplex) -> ValidationReport:
    """sigma^2 = id and sigma o del = delbar o sigma (anti-linearly) on every cell."""
    if k.sigma is None:
        return ValidationReport(())
    checks = []
    for p, q in k.bidegrees():
        s = k.sigma_at(p, q)
        back = k.sigma_at(q, p)
        checks.append(JacobiCheck("sigma^2 - id", (p, q), back @ s.conjugate() == Matrix.identity(k.dim(p, q))))
        lhs = k.sigma_at(p + 1, q) @ k.del_at(p, q).conjugate()
        rhs = k.delbar_at(q, p) @ s
        checks.append(JacobiCheck("sigma del - delbar sigma", (p, q), lhs == rhs))
    return ValidationReport(tuple(checks))


@dataclass(frozen=True)
class TotalComplex:
    """T^k = sum_{p+q=k} A^{p,q} with d = del + delbar in block form."""

    spaces: dict[int, int]
    d: dict[int, Matrix]
    blocks: dict[int, tuple[Bidegree, ...]]
    cell_dims: dict[Bidegree, int]

    def dim(self, k: int) -> int:
        return self.spaces.get(k, 0)

    def d_at(self, k: int) -> Matrix:
        m = self.d.get(k)
        return m if m is not None else Matrix.zeros(self.dim(k + 1), self.dim(k))

    def offset(self, k: int, bideg: Bidegree) -> int:
        """Position of the A^{p,q} block inside T^k."""
        off = 0
        for b in self.blocks.get(k, ()):
            if b == bideg:
                return off
            off += self.cell_dims[b]
        raise KeyError(bideg)


def _blocks(k: DoubleComplex, deg: int) -> tuple[Bidegree, ...]:
    return tuple((p, deg - p) for p in range(k.n + 1) if 0 <= deg - p <= k.n)


def totalize(k: DoubleComplex, check: bool = True) -> TotalComplex:
    if check:
        report = validate_jacobi(k)
        if not report.ok:
            raise InvalidComplexError(report.describe())
    top = 2 * k.n
    blocks = {deg: _blocks(k, deg) for deg in range(top + 1)}
    spaces = {deg: sum(k.dim(p, q) for p, q in blocks[deg]) for deg in range(top + 1)}
    d = {}
    for deg in range(top + 1):
        rows = spaces.get(deg + 1, 0)
        cols = spaces[deg]
        entries = [[None] * cols for _ in range(rows)]
        col_off = 0
        for p, q in blocks[deg]:
            row_off = 0
            for tp, tq in blocks.get(deg + 1, ()):
                if (tp, tq) == (p + 1, q):
                    blk = k.del_at(p, q)
                elif (tp, tq) == (p, q + 1):
                    blk = k.delbar_at(p, q)
                else:
                    blk = None
                if blk is not None:
                    for i in range(blk.rows):
                        for j in range(blk.cols):
                            entries[row_off + i][col_off + j] = blk[i, j]
                row_off += k.dim(tp, tq)
            col_off += k.dim(p, q)
        d[deg] = Matrix(rows, cols, [0 if x is None else x for r in entries for x in r])
    return TotalComplex(spaces, d, blocks, {b: k.dim(*b) for b in k.bidegrees()})


def total_rank(tc: TotalComplex, deg: int) -> int:
    return rank(tc.d_at(deg))
