"""Run the identity suite on a grid and print a per-identity table.

    python scripts/run_grid.py --grid small --out report.json
"""

import argparse
import json
import time

from hyperjack.config import load_grid
from hyperjack.identities import REGISTRY, run_grid


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", default="default")
    ap.add_argument("--id", action="append")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out")
    args = ap.parse_args()

    cfg = load_grid(args.grid)
    start = time.perf_counter()
    report = run_grid(args.id or list(REGISTRY), cfg, threads=args.threads)
    wall = time.perf_counter() - start

    per_id: dict[str, float] = {}
    for c in report["cases"]:
        per_id[c["id"]] = per_id.get(c["id"], 0.0) + c["seconds"]
    print(f"{'id':<14} {'status':<12} {'const':>6} {'equal':>9} {'nondeg':>7} {'skip':>5} {'sec':>8}")
    for id_, s in report["summary"].items():
        const = s["constant"] if s["status"] == "constant" else ""
        print(f"{id_:<14} {s['status']:<12} {const:>6} {s['equal']:>4}/{s['attempted']:<4} "
              f"{s['nondegenerate']:>7} {s['skipped']:>5} {per_id.get(id_, 0):8.2f}")
    print(f"all ok: {report['ok']}  wall {wall:.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report, fh, indent=2)


if __name__ == "__main__":
    main()
