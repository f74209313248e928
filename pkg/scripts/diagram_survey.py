"""Which arrows of the BC -> {del, dR, delbar} -> A diagram fail to be injective or surjective on each builtin."""

import argparse
from dataclasses import dataclass

from bottchern.cohomology import diagram_ranks, hodge_table
from bottchern.lie import builtin_complex, list_builtins


@dataclass
class Config:
    only: str | None = None


def survey(label: str) -> list[str]:
    name, _, n = label.partition(" ")
    k = builtin_complex(name, int(n) if n else None)
    t = hodge_table(k)
    lines = [f"== {label}"]
    for m in diagram_ranks(k, t):
        if m.isomorphism or (m.source_dim == m.target_dim == 0):
            continue
        flags = [w for w, bad in (("not injective", not m.injective), ("not surjective", not m.surjective)) if bad]
        lines.append(f"  {m.source:>10} -> {m.target:<9} k={m.degree}: rank {m.rank} "
                     f"({m.source_dim} -> {m.target_dim}) {', '.join(flags)}")
    if len(lines) == 1:
        lines.append("  every arrow is an isomorphism")
    return lines


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", default=None, help="one builtin label, e.g. 'torus 2'")
    cfg = Config(**vars(ap.parse_args()))
    for label in [cfg.only] if cfg.only else list_builtins():
        print("\n".join(survey(label)))
