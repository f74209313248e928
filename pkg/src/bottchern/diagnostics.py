"""Non-Kaehlerness degrees, inequality slacks, duality checks and the ddbar-lemma verdict."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bicomplex import DoubleComplex, totalize
from .cohomology import HodgeTable, hodge_table, natural_map_rank
from .errors import CriterionDisagreement, DimensionError


def _check(t: HodgeTable, k: int):
    if not 0 <= k <= 2 * t.n:
        raise DimensionError(f"degree {k} outside 0..{2 * t.n}")


def delta_k(t: HodgeTable, k: int) -> int:
    """h^k_BC + h^{2n-k}_BC - 2 b_k. Not clamped: negative values flag a bogus table."""
    _check(t, k)
    return t.h_k("h_bc", k) + t.h_k("h_bc", 2 * t.n - k) - 2 * t.b[k]


def n_k(t: HodgeTable, k: int) -> int:
    """Revised degree h^k_BC - h^k_A."""
    _check(t, k)
    return t.h_k("h_bc", k) - t.h_k("h_a", k)


def at_inequality(t: HodgeTable, k: int) -> int:
    """Slack of sum_{p+q=k} (h_BC + h_A) >= 2 b_k."""
    if not 0 <= k <= 2 * t.n:
        return 0
    return t.h_k("h_bc", k) + t.h_k("h_a", k) - 2 * t.b[k]


def frolicher_slack(t: HodgeTable, k: int) -> int:
    """sum_{p+q=k} h_dolb - b_k; nonnegative on valid complexes."""
    _check(t, k)
    return t.h_k("h_dolb", k) - t.b[k]


@dataclass(frozen=True)
class DualityCheck:
    grid: tuple[tuple[bool, ...], ...]

    @property
    def ok(self) -> bool:
        return all(all(r) for r in self.grid)

    @property
    def failures(self) -> list[tuple[int, int]]:
        return [(p, q) for p, r in enumerate(self.grid) for q, v in enumerate(r) if not v]


def duality_check(t: HodgeTable) -> DualityCheck:
    n = t.n
    return DualityCheck(tuple(tuple(t.h_bc[p][q] == t.h_a[n - p][n - q] for q in range(n + 1))
                              for p in range(n + 1)))


@dataclass(frozen=True)
class Verdict:
    """ddbar-lemma verdict from up to three criteria.

    a: every Delta^k vanishes; b: every N^k vanishes; c: H_BC -> H_dR injective.
    """

    criteria: dict[str, bool]
    detail: dict[str, list] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return len(set(self.criteria.values())) <= 1

    @property
    def value(self) -> bool:
        if not self.agree:
            raise CriterionDisagreement(f"ddbar criteria disagree: {self.criteria}")
        return next(iter(self.criteria.values()))

    def to_json(self) -> dict:
        return {"ddbar_lemma": self.value if self.agree else None, "agree": self.agree,
                "criteria": dict(self.criteria), "detail": {k: list(v) for k, v in self.detail.items()}}


def _table_criteria(t: HodgeTable) -> tuple[dict, dict]:
    deltas = [delta_k(t, k) for k in range(2 * t.n + 1)]
    ns = [n_k(t, k) for k in range(2 * t.n + 1)]
    return ({"delta_vanishes": all(d == 0 for d in deltas), "revised_vanishes": all(x == 0 for x in ns)},
            {"delta": deltas, "n_revised": ns})


def table_verdict(t: HodgeTable) -> Verdict:
    """Criteria (a) and (b) only; never raises, reports agreement."""
    crit, detail = _table_criteria(t)
    return Verdict(crit, detail)


def ddbar_verdict(k: DoubleComplex, table: HodgeTable | None = None) -> Verdict:
    t = table if table is not None else hodge_table(k)
    crit, detail = _table_criteria(t)
    tc = totalize(k, check=False)
    ranks = [natural_map_rank(k, deg, "deRham", total=tc) for deg in range(2 * k.n + 1)]
    crit["bc_to_de_rham_injective"] = all(r == t.h_k("h_bc", deg) for deg, r in enumerate(ranks))
    detail["bc_to_de_rham_rank"] = ranks
    v = Verdict(crit, detail)
    if not v.agree:
        raise CriterionDisagreement(f"ddbar criteria disagree: {crit}")
    return v


@dataclass(frozen=True)
class DiagnosticsReport:
    n: int
    delta: tuple[int, ...]
    n_revised: tuple[int, ...]
    frolicher_ok: tuple[bool, ...]
    at_inequality_slack: tuple[int, ...]
    duality_ok: DualityCheck | None
    verdict: Verdict

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "delta": list(self.delta),
            "n_revised": list(self.n_revised),
            "frolicher_ok": list(self.frolicher_ok),
            "at_inequality_slack": list(self.at_inequality_slack),
            "duality_ok": None if self.duality_ok is None else [list(r) for r in self.duality_ok.grid],
            "duality_holds": None if self.duality_ok is None else self.duality_ok.ok,
            "verdict": self.verdict.to_json(),
        }

    def render(self) -> str:
        """Plain-text layout mirroring the usual table of non-Kaehlerness degrees."""
        n = self.n
        rows = []
        for k in range(1, n + 1):
            label = f"Delta^{k}" if k == n else f"Delta^{k}=Delta^{2 * n - k}"
            rows.append((label, self.delta[k]))
        width = max(len(r[0]) for r in rows) if rows else 8
        lines = [f"{'degree':<{width}} | value", f"{'-' * width}-+------"]
        lines += [f"{label:<{width}} | {value:>5}" for label, value in rows]
        lines.append("")
        lines.append("k         : " + " ".join(f"{k:>3}" for k in range(2 * n + 1)))
        lines.append("Delta^k   : " + " ".join(f"{x:>3}" for x in self.delta))
        lines.append("N^k       : " + " ".join(f"{x:>3}" for x in self.n_revised))
        lines.append("AT slack  : " + " ".join(f"{x:>3}" for x in self.at_inequality_slack))
        lines.append("Froelicher: " + " ".join(f"{'ok' if x else 'NO':>3}" for x in self.frolicher_ok))
        if self.duality_ok is not None:
            lines.append(f"duality h_BC^(p,q) = h_A^(n-p,n-q): {'holds' if self.duality_ok.ok else 'fails at ' + str(self.duality_ok.failures)}")
        v = self.verdict
        for name, val in v.criteria.items():
            lines.append(f"criterion {name}: {val}")
        lines.append(f"ddbar-lemma: {v.value if v.agree else 'criteria disagree'}")
        return "\n".join(lines)


def diagnose(t: HodgeTable, k: DoubleComplex | None = None) -> DiagnosticsReport:
    rng = range(2 * t.n + 1)
    verdict = ddbar_verdict(k, t) if k is not None else table_verdict(t)
    return DiagnosticsReport(
        n=t.n,
        delta=tuple(delta_k(t, j) for j in rng),
        n_revised=tuple(n_k(t, j) for j in rng),
        frolicher_ok=tuple(frolicher_slack(t, j) >= 0 for j in rng),
        at_inequality_slack=tuple(at_inequality(t, j) for j in rng),
        duality_ok=duality_check(t),
        verdict=verdict,
    )
