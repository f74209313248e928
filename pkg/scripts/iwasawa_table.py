"""Print every cohomology grid of the Iwasawa invariant complex and its non-Kaehlerness degrees."""

import argparse
import time
from dataclasses import dataclass

from bottchern.cohomology import hodge_table
from bottchern.diagnostics import diagnose
from bottchern.lie import builtin_complex


@dataclass
class Config:
    name: str = "iwasawa"
    n: int | None = None


def run(cfg: Config) -> None:
    start = time.perf_counter()
    k = builtin_complex(cfg.name, cfg.n)
    t = hodge_table(k)
    report = diagnose(t, k)
    elapsed = time.perf_counter() - start
    for title, grid in [("Bott-Chern", t.h_bc), ("Dolbeault", t.h_dolb), ("del", t.h_del), ("Aeppli", t.h_a)]:
        print(title)
        for row in grid:
            print("  " + " ".join(f"{x:>2}" for x in row))
    print("betti", *t.b)
    print()
    print(report.render())
    print(f"\ncomputed in {elapsed:.3f} s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--name", default=Config.name)
    ap.add_argument("--n", type=int, default=None)
    run(Config(**vars(ap.parse_args())))
