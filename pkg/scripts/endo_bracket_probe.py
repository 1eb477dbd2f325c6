"""Graded Filippov check of the fully antisymmetrised endomorphism bracket on End(p|q).

The r = 2 case is the super Jacobi identity and always holds; for r = 3 the
outcome depends on the superdimension.  Prints one line per (p, q, r).
"""

import argparse
import json

from superclifford.nlie import lemma_probe


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dims", nargs="+", default=["1,1", "2,0", "0,2", "2,1", "1,2", "3,0"])
    ap.add_argument("--arity", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--samples", type=int, default=5_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="print full reports")
    args = ap.parse_args()

    for pair in args.dims:
        p, q = (int(x) for x in pair.split(","))
        for r in args.arity:
            dim = (p + q) ** 2
            mode = "exhaustive" if dim ** (2 * r - 1) <= 50_000 else "sampled"
            rep = lemma_probe(p, q, r, mode, args.samples, args.seed)
            if args.json:
                print(json.dumps(rep.to_json()))
            else:
                print(f"End({p}|{q}) r={r} {mode:<10} checked={rep.checked:<6} "
                      f"violations={len(rep.violations):<5} holds={rep.passed}")


if __name__ == "__main__":
    main()
