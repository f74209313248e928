"""Random blow-up sequences on fuzz threefold tables; reports Delta^k and N^k invariance and timing."""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from bottchern.blowup import invariance_sweep


@dataclass
class Config:
    seed: str = "0"
    iterations: int = 1000
    max_steps: int = 5
    max_genus: int = 3
    repeats: int = 3


def run(cfg: Config) -> dict:
    results = []
    for r in range(cfg.repeats):
        start = time.perf_counter()
        report = invariance_sweep(f"{cfg.seed}/{r}", cfg.iterations, cfg.max_steps, cfg.max_genus)
        results.append({**report.to_json(), "seconds": round(time.perf_counter() - start, 3)})
    return {"config": asdict(cfg), "runs": results, "all_ok": all(x["ok"] for x in results)}


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for f, v in asdict(Config()).items():
        ap.add_argument(f"--{f.replace('_', '-')}", type=type(v), default=v)
    out = run(Config(**vars(ap.parse_args())))
    for x in out["runs"]:
        print(f"seed {x['seed']}: steps {x['steps_applied']}, ok {x['ok']}, {x['seconds']} s")
    print(json.dumps({"all_ok": out["all_ok"]}))
