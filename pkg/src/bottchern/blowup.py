"""Blow-up formulas as arithmetic on Hodge tables.

A blow-up of X along a center Z of codimension r adds, in bidegree (p,q), the
(p-i,q-i) numbers of Z for i = 1..r-1; the (p,0) and (0,q) rows never move.
Point centers and curves in threefolds are the proven cases. Any other center
goes through ``blow_up_general`` and requires ``allow_conjectural``.

Aeppli grids are kept in step through h_A^{p,q} = h_BC^{n-p,n-q}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cohomology import Grid, HodgeTable
from .diagnostics import delta_k, n_k
from .errors import ConjecturalFormulaError, DimensionError


def point_table() -> HodgeTable:
    return HodgeTable(0, ((1,),), ((1,),), ((1,),), (1,), ((1,),))


def curve_table(genus: int) -> HodgeTable:
    if genus < 0:
        raise DimensionError("genus must be nonnegative")
    g = ((1, genus), (genus, 1))
    return HodgeTable(1, g, g, g, (1, 2 * genus, 1), g)


def _zeros(n: int) -> list[list[int]]:
    return [[0] * (n + 1) for _ in range(n + 1)]


def _shifted(grid: Grid, n: int, codim: int) -> list[list[int]]:
    """inc[p][q] = sum_{i=1}^{codim-1} grid[p-i][q-i], out-of-range terms zero."""
    m = len(grid) - 1
    inc = _zeros(n)
    for p in range(n + 1):
        for q in range(n + 1):
            inc[p][q] = sum(grid[p - i][q - i] for i in range(1, codim)
                            if 0 <= p - i <= m and 0 <= q - i <= m)
    return inc


def _add(grid: Grid, inc) -> Grid:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(grid, inc))


def _transpose(grid) -> list[list[int]]:
    return [list(r) for r in zip(*grid)]


def _apply(t: HodgeTable, inc_bc, inc_dolb, inc_del, db) -> HodgeTable:
    n = t.n
    inc_a = [[inc_bc[n - p][n - q] for q in range(n + 1)] for p in range(n + 1)]
    return HodgeTable(
        n=n,
        h_bc=_add(t.h_bc, inc_bc),
        h_dolb=_add(t.h_dolb, inc_dolb),
        h_a=_add(t.h_a, inc_a),
        b=tuple(x + y for x, y in zip(t.b, db)),
        h_del=None if t.h_del is None else _add(t.h_del, inc_del),
    )


def blow_up_point(t: HodgeTable) -> HodgeTable:
    n = t.n
    if n < 2:
        raise DimensionError(f"point blow-up needs complex dimension >= 2, got {n}")
    inc = _zeros(n)
    for p in range(1, n):
        inc[p][p] = 1
    db = [1 if k % 2 == 0 and 2 <= k <= 2 * n - 2 else 0 for k in range(2 * n + 1)]
    return _apply(t, inc, inc, inc, db)


def blow_up_curve(t: HodgeTable, genus: int) -> HodgeTable:
    if t.n != 3:
        raise DimensionError(f"curve blow-up is only available for threefolds, got n = {t.n}")
    c = curve_table(genus)
    inc = _shifted(c.h_dolb, 3, 2)
    db = [c.b[k - 2] if 2 <= k <= 4 else 0 for k in range(7)]
    return _apply(t, inc, inc, _transpose(inc), db)


def is_proven_case(n: int, codim: int) -> bool:
    return codim == n or (n, codim) == (3, 2)


def blow_up_general(tX: HodgeTable, tZ: HodgeTable, codim: int, allow_conjectural: bool = False) -> HodgeTable:
    n = tX.n
    if codim < 2 or codim > n:
        raise DimensionError(f"codimension must satisfy 2 <= r <= n = {n}, got {codim}")
    if tZ.n != n - codim:
        raise DimensionError(f"center has dimension {tZ.n}, expected n - codim = {n - codim}")
    if not is_proven_case(n, codim) and not allow_conjectural:
        raise ConjecturalFormulaError(
            f"blow-up formula for n = {n}, codim = {codim} is conjectural; pass allow_conjectural")
    inc_bc = _shifted(tZ.h_bc, n, codim)
    inc_dolb = _shifted(tZ.h_dolb, n, codim)
    inc_del = _shifted(tZ.h_del, n, codim) if tZ.h_del is not None else _transpose(inc_dolb)
    db = [sum(tZ.b[k - 2 * i] for i in range(1, codim) if 0 <= k - 2 * i <= 2 * tZ.n)
          for k in range(2 * n + 1)]
    out = _apply(tX, inc_bc, inc_dolb, inc_del, db)
    assert all(out.h_bc[p][0] == tX.h_bc[p][0] and out.h_bc[0][p] == tX.h_bc[0][p] for p in range(n + 1))
    return out


@dataclass(frozen=True)
class BlowupStep:
    kind: str
    genus: int = 0
    center: HodgeTable | None = None
    codim: int = 0

    def __post_init__(self):
        if self.kind not in ("point", "curve", "general"):
            raise DimensionError(f"unknown blow-up kind {self.kind!r}")
        if self.kind == "curve" and self.genus < 0:
            raise DimensionError("genus must be nonnegative")
        if self.kind == "general" and (self.center is None or self.codim < 2):
            raise DimensionError("general steps need a center table and codim >= 2")

    @classmethod
    def point(cls) -> "BlowupStep":
        return cls("point")

    @classmethod
    def curve(cls, genus: int) -> "BlowupStep":
        return cls("curve", genus=genus)

    def label(self) -> str:
        if self.kind == "curve":
            return f"curve(g={self.genus})"
        if self.kind == "general":
            return f"general(codim={self.codim})"
        return "point"

    def apply(self, t: HodgeTable, allow_conjectural: bool = False) -> HodgeTable:
        if self.kind == "point":
            return blow_up_point(t)
        if self.kind == "curve":
            return blow_up_curve(t, self.genus)
        return blow_up_general(t, self.center, self.codim, allow_conjectural)


@dataclass(frozen=True)
class InvarianceReport:
    labels: tuple[str, ...]
    deltas: tuple[tuple[int, ...], ...]
    revised: tuple[tuple[int, ...], ...]
    delta_constant: bool
    revised_constant: bool
    revised_constant_point_steps: bool

    def to_json(self) -> dict:
        return {"stages": [{"step": lab, "delta": list(d), "n_revised": list(r)}
                           for lab, d, r in zip(self.labels, self.deltas, self.revised)],
                "delta_constant": self.delta_constant,
                "n_revised_constant": self.revised_constant,
                "n_revised_constant_point_steps": self.revised_constant_point_steps}

    def render(self) -> str:
        width = max(len(x) for x in self.labels)
        lines = [f"{'stage':<{width}} | Delta^0..6            | N^0..6"]
        for lab, d, r in zip(self.labels, self.deltas, self.revised):
            lines.append(f"{lab:<{width}} | {' '.join(f'{x:>2}' for x in d)} | {' '.join(f'{x:>3}' for x in r)}")
        lines.append(f"Delta constant: {self.delta_constant}")
        lines.append(f"N constant: {self.revised_constant} (across point steps: {self.revised_constant_point_steps})")
        return "\n".join(lines)


def check_delta_invariance(t: HodgeTable, steps) -> InvarianceReport:
    if t.n != 3:
        raise DimensionError(f"invariance checks run on threefolds, got n = {t.n}")
    labels, deltas, revised = ["X"], [], []
    tables = [t]
    for s in steps:
        if s.kind not in ("point", "curve"):
            raise DimensionError("invariance sequences take point and curve steps only")
        tables.append(s.apply(tables[-1]))
        labels.append(s.label())
    for tab in tables:
        deltas.append(tuple(delta_k(tab, k) for k in range(7)))
        revised.append(tuple(n_k(tab, k) for k in range(7)))
    point_ok = all(revised[i] == revised[i + 1] for i, s in enumerate(steps) if s.kind == "point")
    return InvarianceReport(tuple(labels), tuple(deltas), tuple(revised),
                            len(set(deltas)) == 1, len(set(revised)) == 1, point_ok)


# fuzzing

def random_threefold_table(seed, max_entry: int = 12) -> HodgeTable:
    """Arithmetic fuzz input: symmetric grids, h^{0,0} = 1, b_k = b_{6-k}, Aeppli by duality.

    Nothing ties the grids to an actual manifold (the Froelicher inequality may fail).
    """
    rng = random.Random(seed)
    n = 3

    def symmetric():
        g = _zeros(n)
        for p in range(n + 1):
            for q in range(p, n + 1):
                g[p][q] = g[q][p] = rng.randint(0, max_entry)
        g[0][0] = 1
        return g

    h_bc = symmetric()
    h_dolb = [[rng.randint(0, max_entry) for _ in range(n + 1)] for _ in range(n + 1)]
    h_dolb[0][0] = 1
    half = [1] + [rng.randint(0, 2 * max_entry) for _ in range(3)]
    b = half + half[2::-1]
    h_a = [[h_bc[n - p][n - q] for q in range(n + 1)] for p in range(n + 1)]
    return HodgeTable(n, h_bc, h_dolb, h_a, b, _transpose(h_dolb))


def random_steps(rng: random.Random, max_steps: int = 5, max_genus: int = 3) -> list[BlowupStep]:
    return [BlowupStep.point() if rng.random() < 0.5 else BlowupStep.curve(rng.randint(0, max_genus))
            for _ in range(rng.randint(1, max_steps))]


@dataclass
class SweepReport:
    seed: int | str
    iterations: int
    delta_failures: list[int] = field(default_factory=list)
    point_revised_failures: list[int] = field(default_factory=list)
    steps_applied: int = 0

    @property
    def ok(self) -> bool:
        return not self.delta_failures and not self.point_revised_failures

    def to_json(self) -> dict:
        return {"seed": self.seed, "iterations": self.iterations, "steps_applied": self.steps_applied,
                "delta_invariant": not self.delta_failures, "delta_failures": self.delta_failures,
                "n_revised_point_invariant": not self.point_revised_failures,
                "n_revised_point_failures": self.point_revised_failures, "ok": self.ok}

    def render(self) -> str:
        return "\n".join([
            f"seed {self.seed}: {self.iterations} random threefold tables, {self.steps_applied} blow-up steps",
            f"Delta^k invariant at every step: {not self.delta_failures} ({len(self.delta_failures)} failures)",
            f"N^k invariant under point steps: {not self.point_revised_failures} "
            f"({len(self.point_revised_failures)} failures)",
        ])


def invariance_sweep(seed, iterations: int, max_steps: int = 5, max_genus: int = 3) -> SweepReport:
    report = SweepReport(seed, iterations)
    for i in range(iterations):
        trial = f"{seed}:{i}"
        rng = random.Random(trial + ":steps")
        steps = random_steps(rng, max_steps, max_genus)
        r = check_delta_invariance(random_threefold_table(trial), steps)
        report.steps_applied += len(steps)
        if not r.delta_constant:
            report.delta_failures.append(i)
        if not r.revised_constant_point_steps:
            report.point_revised_failures.append(i)
    return report
