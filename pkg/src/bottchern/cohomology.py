"""Dimensions of de Rham, Dolbeault, del, Bott-Chern and Aeppli cohomology of a
double complex, and ranks of the identity-induced maps between them.

All quotients are computed by rank formulas. Explicit representatives are only
built for the natural maps, where a quotient class has to be pushed forward.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .algebra import Matrix, hstack, kernel_dim, nullspace, pivot_columns, rank, vstack
from .bicomplex import DoubleComplex, TotalComplex, totalize, validate_jacobi
from .errors import DimensionError, InvalidComplexError, ParseError

Grid = tuple[tuple[int, ...], ...]


def _check_bidegree(k: DoubleComplex, p: int, q: int):
    if not k.in_range(p, q):
        raise DimensionError(f"bidegree ({p},{q}) outside 0..{k.n}")


def _check_degree(k: DoubleComplex, deg: int):
    if not 0 <= deg <= 2 * k.n:
        raise DimensionError(f"degree {deg} outside 0..{2 * k.n}")


def h_dolbeault(k: DoubleComplex, p: int, q: int) -> int:
    _check_bidegree(k, p, q)
    return kernel_dim(k.delbar_at(p, q)) - rank(k.delbar_at(p, q - 1))


def h_del(k: DoubleComplex, p: int, q: int) -> int:
    _check_bidegree(k, p, q)
    return kernel_dim(k.del_at(p, q)) - rank(k.del_at(p - 1, q))


def betti(k: DoubleComplex, deg: int, total: TotalComplex | None = None) -> int:
    _check_degree(k, deg)
    tc = total if total is not None else totalize(k)
    return kernel_dim(tc.d_at(deg)) - rank(tc.d_at(deg - 1))


def _bc_cocycle(k: DoubleComplex, p: int, q: int) -> Matrix:
    """Stacked (del; delbar) on A^{p,q}: its kernel is ker del cap ker delbar."""
    return vstack(k.del_at(p, q), k.delbar_at(p, q))


def _aeppli_coboundary(k: DoubleComplex, p: int, q: int) -> Matrix:
    """Columns spanning im del + im delbar inside A^{p,q}."""
    return hstack(k.del_at(p - 1, q), k.delbar_at(p, q - 1))


def h_bott_chern(k: DoubleComplex, p: int, q: int) -> int:
    _check_bidegree(k, p, q)
    cocycle = _bc_cocycle(k, p, q)
    coboundary = k.ddbar_at(p - 1, q - 1)
    if not (cocycle @ coboundary).is_zero():
        raise InvalidComplexError(f"im del delbar not inside ker del cap ker delbar at ({p},{q})")
    return kernel_dim(cocycle) - rank(coboundary)


def h_aeppli(k: DoubleComplex, p: int, q: int) -> int:
    _check_bidegree(k, p, q)
    cocycle = k.ddbar_at(p, q)
    coboundary = _aeppli_coboundary(k, p, q)
    if not (cocycle @ coboundary).is_zero():
        raise InvalidComplexError(f"im del + im delbar not inside ker del delbar at ({p},{q})")
    return kernel_dim(cocycle) - rank(coboundary)


# natural maps of the diagram BC -> {del, dR, delbar} -> A

SOURCES = ("bott_chern", "dolbeault", "del", "deRham")
TARGETS = ("deRham", "dolbeault", "del", "aeppli")
DIAGRAM = (
    ("bott_chern", "del"),
    ("bott_chern", "deRham"),
    ("bott_chern", "dolbeault"),
    ("del", "aeppli"),
    ("deRham", "aeppli"),
    ("dolbeault", "aeppli"),
)


def _representatives(cocycle: Matrix, coboundary: Matrix) -> list[tuple]:
    """Cocycle vectors completing a pivot basis of the coboundaries to one of the cocycles.

    Their classes form a basis of the quotient.
    """
    kernel = nullspace(cocycle)
    dim = cocycle.cols
    cols = list(coboundary.columns()) + kernel
    if not cols or dim == 0:
        return []
    pivots = pivot_columns(Matrix.from_columns(cols, dim))
    return [cols[j] for j in pivots if j >= coboundary.cols]


def _source_data(k: DoubleComplex, source: str, p: int, q: int) -> tuple[Matrix, Matrix]:
    if source == "bott_chern":
        return _bc_cocycle(k, p, q), k.ddbar_at(p - 1, q - 1)
    if source == "dolbeault":
        return k.delbar_at(p, q), k.delbar_at(p, q - 1)
    if source == "del":
        return k.del_at(p, q), k.del_at(p - 1, q)
    raise ValueError(source)


def _target_coboundary(k: DoubleComplex, target: str, p: int, q: int) -> Matrix:
    if target == "dolbeault":
        return k.delbar_at(p, q - 1)
    if target == "del":
        return k.del_at(p - 1, q)
    if target == "aeppli":
        return _aeppli_coboundary(k, p, q)
    raise ValueError(target)


def _embed(vec: Sequence, offset: int, size: int) -> list:
    out = [0] * size
    out[offset:offset + len(vec)] = vec
    return out


def _block_diagonal(k: DoubleComplex, tc: TotalComplex, deg: int, pieces) -> Matrix:
    """Columns of per-cell matrices embedded into T^deg."""
    size = tc.dim(deg)
    cols = []
    for (p, q), m in pieces:
        off = tc.offset(deg, (p, q))
        cols.extend(_embed(c, off, size) for c in m.columns())
    return Matrix.from_columns(cols, size)


def _quotient_rank(coboundary: Matrix, reps: list) -> int:
    if not reps:
        return 0
    r = Matrix.from_columns(reps, coboundary.rows)
    return rank(hstack(coboundary, r)) - rank(coboundary)


def natural_map_rank(k: DoubleComplex, degree, target: str, source: str = "bott_chern",
                     total: TotalComplex | None = None) -> int:
    """Rank of the identity-induced map H_source -> H_target.

    ``degree`` is a total degree (int) or a bidegree (p, q). For a total degree
    the map is taken on the direct sum over p + q = degree; maps into or out of
    de Rham cohomology are computed jointly in T^degree.
    """
    if (source, target) not in DIAGRAM:
        raise ValueError(f"no natural map {source} -> {target}")
    if isinstance(degree, tuple):
        p, q = degree
        _check_bidegree(k, p, q)
        if source == "deRham":
            raise DimensionError("de Rham cohomology is graded by total degree only")
        if target != "deRham":
            reps = _representatives(*_source_data(k, source, p, q))
            return _quotient_rank(_target_coboundary(k, target, p, q), reps)
        cells, deg = [(p, q)], p + q
    else:
        deg = degree
        _check_degree(k, deg)
        cells = [(p, deg - p) for p in range(k.n + 1) if 0 <= deg - p <= k.n]
        if source != "deRham" and target != "deRham":
            return sum(natural_map_rank(k, c, target, source) for c in cells)

    tc = total if total is not None else totalize(k)
    size = tc.dim(deg)
    if source == "deRham":
        reps = _representatives(tc.d_at(deg), tc.d_at(deg - 1))
        cob = _block_diagonal(k, tc, deg, [(c, _aeppli_coboundary(k, *c)) for c in cells])
        return _quotient_rank(cob, reps)
    reps = []
    for c in cells:
        off = tc.offset(deg, c)
        reps.extend(_embed(v, off, size) for v in _representatives(*_source_data(k, source, *c)))
    return _quotient_rank(tc.d_at(deg - 1), reps)


# tables

def _grid(n: int, f) -> Grid:
    return tuple(tuple(f(p, q) for q in range(n + 1)) for p in range(n + 1))


def degree_sum(grid: Grid, deg: int) -> int:
    """sum_{p+q=deg} grid[p][q]."""
    n = len(grid) - 1
    return sum(grid[p][deg - p] for p in range(n + 1) if 0 <= deg - p <= n)


@dataclass(frozen=True)
class HodgeTable:
    """h^{p,q} grids for Bott-Chern, Dolbeault, del and Aeppli cohomology, plus Betti numbers."""

    n: int
    h_bc: Grid
    h_dolb: Grid
    h_a: Grid
    b: tuple[int, ...]
    h_del: Grid | None = None

    def __post_init__(self):
        size = self.n + 1
        for name in ("h_bc", "h_dolb", "h_a", "h_del"):
            g = getattr(self, name)
            if g is None:
                continue
            g = tuple(tuple(int(x) for x in row) for row in g)
            object.__setattr__(self, name, g)
            if len(g) != size or any(len(r) != size for r in g):
                raise DimensionError(f"{name} must be a {size}x{size} grid")
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.b) != 2 * self.n + 1:
            raise DimensionError(f"b must have length {2 * self.n + 1}")

    def h_k(self, kind: str, deg: int) -> int:
        return degree_sum(getattr(self, kind), deg)

    def invariant_violations(self, symmetric: bool = True) -> list[str]:
        problems = []
        grids = {nm: getattr(self, nm) for nm in ("h_bc", "h_dolb", "h_a", "h_del") if getattr(self, nm) is not None}
        for nm, g in grids.items():
            if any(x < 0 for row in g for x in row):
                problems.append(f"{nm} has a negative entry")
        if any(x < 0 for x in self.b):
            problems.append("negative Betti number")
        if symmetric:
            for nm in ("h_bc", "h_a"):
                g = grids[nm]
                if any(g[p][q] != g[q][p] for p in range(self.n + 1) for q in range(self.n + 1)):
                    problems.append(f"{nm} is not conjugation-symmetric")
            if self.h_del is not None and any(self.h_dolb[p][q] != self.h_del[q][p]
                                              for p in range(self.n + 1) for q in range(self.n + 1)):
                problems.append("h_dolb is not the transpose of h_del")
        return problems

    def to_json(self) -> dict:
        doc = {"n": self.n, "h_bc": [list(r) for r in self.h_bc], "h_dolb": [list(r) for r in self.h_dolb],
               "h_a": [list(r) for r in self.h_a], "b": list(self.b)}
        if self.h_del is not None:
            doc["h_del"] = [list(r) for r in self.h_del]
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, doc: dict) -> "HodgeTable":
        """Accepts a bare table or any document carrying one under ``hodge_table``."""
        if isinstance(doc, dict) and "hodge_table" in doc:
            doc = doc["hodge_table"]
        try:
            return cls(doc["n"], doc["h_bc"], doc["h_dolb"], doc["h_a"], doc["b"], doc.get("h_del"))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed Hodge table document: {exc}") from exc

    @classmethod
    def loads(cls, text: str) -> "HodgeTable":
        try:
            return cls.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc


def hodge_table(k: DoubleComplex) -> HodgeTable:
    report = validate_jacobi(k)
    if not report.ok:
        raise InvalidComplexError(report.describe())
    tc = totalize(k, check=False)
    n = k.n
    return HodgeTable(
        n=n,
        h_bc=_grid(n, lambda p, q: h_bott_chern(k, p, q)),
        h_dolb=_grid(n, lambda p, q: h_dolbeault(k, p, q)),
        h_a=_grid(n, lambda p, q: h_aeppli(k, p, q)),
        b=tuple(betti(k, deg, tc) for deg in range(2 * n + 1)),
        h_del=_grid(n, lambda p, q: h_del(k, p, q)),
    )


def _graded_dim(table: HodgeTable, kind: str, deg: int) -> int:
    if kind == "deRham":
        return table.b[deg]
    grid = {"bott_chern": table.h_bc, "dolbeault": table.h_dolb, "del": table.h_del, "aeppli": table.h_a}[kind]
    return degree_sum(grid, deg)


@dataclass(frozen=True)
class MapRank:
    source: str
    target: str
    degree: int
    rank: int
    source_dim: int
    target_dim: int

    @property
    def injective(self) -> bool:
        return self.rank == self.source_dim

    @property
    def surjective(self) -> bool:
        return self.rank == self.target_dim

    @property
    def isomorphism(self) -> bool:
        return self.injective and self.surjective


def diagram_ranks(k: DoubleComplex, table: HodgeTable | None = None) -> list[MapRank]:
    """Every arrow of the BC/del/dR/delbar/A diagram in every total degree."""
    t = table if table is not None else hodge_table(k)
    tc = totalize(k, check=False)
    out = []
    for src, tgt in DIAGRAM:
        for deg in range(2 * k.n + 1):
            r = natural_map_rank(k, deg, tgt, src, total=tc)
            out.append(MapRank(src, tgt, deg, r, _graded_dim(t, src, deg), _graded_dim(t, tgt, deg)))
    return out
