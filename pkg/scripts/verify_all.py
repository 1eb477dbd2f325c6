"""Run every verification suite over a range of generator counts and print a summary.

    python scripts/verify_all.py --n 2 4 6 --out reports.jsonl
"""

import argparse
import json
import time

from superclifford.cli import CHECKS, run_check

# checks that are only defined (or only affordable) for some n
LIMITS = {"theorem14": {2, 4}, "assoc": set(range(1, 6)), "filippov2": set(range(1, 5))}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[2, 4])
    ap.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    ap.add_argument("--samples", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", help="write full reports as JSONL")
    args = ap.parse_args()

    rows = []
    for n in args.n:
        for check in CHECKS:
            if check in LIMITS and n not in LIMITS[check]:
                continue
            mode = args.mode
            if check == "filippov3" and n > 2 and mode == "exhaustive":
                mode = "sampled"
            t = time.perf_counter()
            rep = run_check(check, n, mode, args.seed, args.samples)
            dt = time.perf_counter() - t
            rows.append((n, check, mode, rep, dt))
            print(f"n={n:<2} {check:<10} {mode:<10} checked={rep.checked:<8} "
                  f"violations={len(rep.violations):<4} {'ok' if rep.passed else 'FAIL'}  {dt:.2f}s")

    if args.out:
        with open(args.out, "w") as fh:
            for n, check, mode, rep, dt in rows:
                fh.write(json.dumps({**rep.to_json(), "seconds": round(dt, 3)}) + "\n")


if __name__ == "__main__":
    main()
