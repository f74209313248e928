"""Command-line entry point.

    bottchern analyze spec.json
    bottchern builtin iwasawa --format table
    bottchern blowup curve --table t.json --genus 2
    bottchern invariance --seed 0 --iterations 1000

Exit codes: 0 ok, 2 parse error, 3 invalid complex, 4 conjectural formula
without --allow-conjectural, 5 dimension or argument error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .algebra import rank
from .blowup import (blow_up_curve, blow_up_general, blow_up_point, invariance_sweep)
from .cohomology import HodgeTable, hodge_table
from .diagnostics import diagnose
from .errors import BottChernError, DimensionError, ParseError
from .lie import build_bicomplex, builtin_spec, list_builtins, parse_spec


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(DimensionError.exit_code, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _grid_text(title: str, grid) -> list[str]:
    n = len(grid) - 1
    lines = [f"{title} (rows p, columns q)", "     " + "".join(f"q={q:<4}" for q in range(n + 1))]
    lines += [f"p={p:<3}" + "".join(f"{grid[p][q]:<6}" for q in range(n + 1)) for p in range(n + 1)]
    return lines


def _cells(k) -> list[dict]:
    return [{"p": p, "q": q, "dim": k.dim(p, q), "rank_del": rank(k.del_at(p, q)),
             "rank_delbar": rank(k.delbar_at(p, q))} for p, q in k.bidegrees()]


def _emit(fmt: str, name: str, table: HodgeTable, report, cells=None) -> str:
    if fmt == "json":
        doc = {"name": name, "hodge_table": table.to_json(), "diagnostics": report.to_json()}
        if cells is not None:
            doc["cells"] = cells
        return json.dumps(doc, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = ["p", "q", "k", "h_bc", "h_dolb", "h_del", "h_a", "b_k"]
        if cells is not None:
            header += ["dim", "rank_del", "rank_delbar"]
        w.writerow(header)
        by_cell = {(c["p"], c["q"]): c for c in cells or []}
        for p in range(table.n + 1):
            for q in range(table.n + 1):
                row = [p, q, p + q, table.h_bc[p][q], table.h_dolb[p][q],
                       "" if table.h_del is None else table.h_del[p][q], table.h_a[p][q], table.b[p + q]]
                if cells is not None:
                    c = by_cell[(p, q)]
                    row += [c["dim"], c["rank_del"], c["rank_delbar"]]
                w.writerow(row)
        return buf.getvalue().rstrip("\n")
    lines = [f"== {name} (complex dimension {table.n}) =="]
    lines += _grid_text("h_BC", table.h_bc)
    lines += _grid_text("h_dolbeault", table.h_dolb)
    if table.h_del is not None:
        lines += _grid_text("h_del", table.h_del)
    lines += _grid_text("h_A", table.h_a)
    lines.append("betti: " + " ".join(str(x) for x in table.b))
    if cells is not None:
        lines.append("cells: p q dim rank(del) rank(delbar)")
        lines += [f"  {c['p']} {c['q']} {c['dim']:>3} {c['rank_del']:>3} {c['rank_delbar']:>3}" for c in cells]
    lines.append("")
    lines.append(report.render())
    return "\n".join(lines)


def _analyze(spec, args) -> str:
    k = build_bicomplex(spec)
    table = hodge_table(k)
    report = diagnose(table, k)
    return _emit(args.format, spec.name or "spec", table, report, _cells(k) if args.show_cells else None)


def _emit_table(args, name: str, table: HodgeTable) -> str:
    return _emit(args.format, name, table, diagnose(table))


def _cmd_analyze(args):
    return _analyze(parse_spec(_read(args.spec)), args)


def _cmd_builtin(args):
    return _analyze(builtin_spec(args.name, args.n), args)


def _cmd_list(args):
    names = list_builtins()
    if args.format == "json":
        return json.dumps(names)
    return "\n".join(names)


def _load_table(path: str) -> HodgeTable:
    return HodgeTable.loads(_read(path))


def _cmd_blowup(args):
    t = _load_table(args.table)
    if args.kind == "point":
        return _emit_table(args, "blow-up at a point", blow_up_point(t))
    if args.kind == "curve":
        return _emit_table(args, f"blow-up along a genus {args.genus} curve", blow_up_curve(t, args.genus))
    z = _load_table(args.center)
    out = blow_up_general(t, z, args.codim, args.allow_conjectural)
    return _emit_table(args, f"blow-up along a codimension {args.codim} center", out)


def _cmd_invariance(args):
    report = invariance_sweep(args.seed, args.iterations, args.max_steps, args.max_genus)
    if args.format == "json":
        return json.dumps(report.to_json(), indent=2)
    if args.format == "csv":
        return "\n".join(["seed,iterations,steps_applied,delta_failures,n_point_failures",
                          f"{report.seed},{report.iterations},{report.steps_applied},"
                          f"{len(report.delta_failures)},{len(report.point_revised_failures)}"])
    return report.render()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")
    common.add_argument("--show-cells", action="store_true", help="include cell dimensions and differential ranks")

    parser = _Parser(prog="bottchern", description="Bott-Chern and Aeppli cohomology of invariant-form double complexes")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="analyze a structure-spec JSON file")
    p.add_argument("spec")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("builtin", parents=[common], help="analyze a shipped example")
    p.add_argument("name")
    p.add_argument("n", nargs="?", type=int)
    p.set_defaults(func=_cmd_builtin)

    p = sub.add_parser("list", parents=[common], help="list shipped examples")
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("blowup", help="apply a blow-up formula to a Hodge table")
    bsub = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    b = bsub.add_parser("point", parents=[common])
    b.add_argument("--table", required=True)
    b = bsub.add_parser("curve", parents=[common])
    b.add_argument("--table", required=True)
    b.add_argument("--genus", type=int, required=True)
    b = bsub.add_parser("general", parents=[common])
    b.add_argument("--table", required=True)
    b.add_argument("--center", required=True)
    b.add_argument("--codim", type=int, required=True)
    b.add_argument("--allow-conjectural", action="store_true")
    p.set_defaults(func=_cmd_blowup)

    p = sub.add_parser("invariance", parents=[common], help="random blow-up sequences on fuzz tables")
    p.add_argument("--seed", required=True)
    p.add_argument("--iterations", type=int, default=1000)
    p.add_argument("--max-steps", type=int, default=5)
    p.add_argument("--max-genus", type=int, default=3)
    p.set_defaults(func=_cmd_invariance)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except BottChernError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
