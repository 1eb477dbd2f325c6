"""Command-line front end.

Exit codes: 0 success, 1 I/O failure, 2 usage or parse error, 3 verification violation.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from .checks import (
    check_associativity,
    check_representation_homomorphism,
    check_supertrace_table,
    commutator_table,
)
from .clifford import graded_commutator
from .errors import AmbientMismatchError, HomogeneityError, ParseError
from .expr import parse_element
from .nlie import BracketTable, check_degree_additivity, check_graded_filippov, check_graded_skew
from .spinor import element_supertrace, represent
from .ternary import build_structure_table, ternary_bracket, ternary_table, verify_theorem14

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3

CHECKS = ("assoc", "degree", "skew", "filippov2", "filippov3", "hom", "strtable", "theorem14")


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cmd_bracket(args) -> int:
    if len(args.expressions) != args.arity:
        raise UsageError(f"arity {args.arity} needs {args.arity} expressions, got {len(args.expressions)}")
    xs = [parse_element(e, args.n) for e in args.expressions]
    out = graded_commutator(*xs) if args.arity == 2 else ternary_bracket(*xs)
    print(_dump(out.to_json()))
    return EXIT_OK


def table_records(table: BracketTable, canonical: bool = False, nonzero: bool = False):
    """Records in ascending lexicographic tuple order."""
    tuples = table.canonical_domain() if canonical else table.domain()
    for t in tuples:
        if nonzero and not table.entry(t):
            continue
        yield table.to_record(t)


def write_table(table: BracketTable, stream, canonical: bool = False, nonzero: bool = False) -> int:
    header = dict(table.meta)
    if canonical:
        header["records"] = "canonical"
    stream.write(_dump(header) + "\n")
    count = 0
    for rec in table_records(table, canonical, nonzero):
        stream.write(_dump(rec) + "\n")
        count += 1
    return count


def _build_table(n: int, arity: int, workers: int) -> BracketTable:
    if arity == 3:
        return build_structure_table(n, workers=workers)
    if not 1 <= n <= 8:
        raise UsageError(f"binary tables are generated for n <= 8, got {n}")
    return commutator_table(n)


def cmd_table(args) -> int:
    if args.arity == 3 and args.n % 2:
        raise UsageError(f"ternary tables need even n, got {args.n}")
    table = _build_table(args.n, args.arity, args.workers)
    if args.out == "-":
        write_table(table, sys.stdout, args.canonical, args.nonzero)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            count = write_table(table, fh, args.canonical, args.nonzero)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(_dump({"out": args.out, "records": count, **table.meta}))
    return EXIT_OK


def _require_even(n: int) -> None:
    if n % 2:
        raise UsageError(f"the spinor representation needs even n, got {n}")


def cmd_str(args) -> int:
    _require_even(args.n)
    x = parse_element(args.expression, args.n)
    print(_dump(element_supertrace(x, via_matrix=args.via_matrix).to_json()))
    return EXIT_OK


def cmd_rep(args) -> int:
    _require_even(args.n)
    x = parse_element(args.expression, args.n)
    print(_dump(represent(x).to_json()))
    return EXIT_OK


def run_check(check: str, n: int, mode: str = "exhaustive", seed: int = 0, samples: int = 10_000, arity: int = 3):
    if check == "assoc":
        return check_associativity(n, mode, samples, seed)
    if check == "hom":
        _require_even(n)
        return check_representation_homomorphism(n, mode, samples, seed)
    if check == "strtable":
        _require_even(n)
        return check_supertrace_table(n)
    if check == "theorem14":
        return verify_theorem14(n)
    if check in ("degree", "skew"):
        if arity == 3:
            _require_even(n)
        table = ternary_table(n) if arity == 3 else commutator_table(n)
        fn = check_degree_additivity if check == "degree" else check_graded_skew
        rep = fn(table, mode, samples, seed)
        rep.info.update({"n": n, "arity": arity, "mode": mode})
        return rep
    if check == "filippov2":
        rep = check_graded_filippov(commutator_table(n), mode, samples, seed)
    else:
        _require_even(n)
        rep = check_graded_filippov(ternary_table(n), mode, samples, seed)
    rep.check = check
    rep.info["n"] = n
    return rep


def cmd_verify(args) -> int:
    rep = run_check(args.check, args.n, args.mode, args.seed, args.samples, args.arity or 3)
    print(_dump(rep.to_json()))
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superclifford", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bracket", help="graded binary or induced ternary bracket")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--arity", type=int, choices=(2, 3), default=2)
    b.add_argument("expressions", nargs="+")
    b.set_defaults(func=cmd_bracket)

    t = sub.add_parser("table", help="structure-constant table as JSONL")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--arity", type=int, choices=(2, 3), default=3)
    t.add_argument("--out", default="-")
    t.add_argument("--workers", type=int, default=1)
    t.add_argument("--canonical", action="store_true", help="only nondecreasing tuples")
    t.add_argument("--nonzero", action="store_true", help="skip zero entries")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("str", help="supertrace of an element")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--via-matrix", action="store_true")
    s.add_argument("expression")
    s.set_defaults(func=cmd_str)

    r = sub.add_parser("rep", help="spinor matrix of an element")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("expression")
    r.set_defaults(func=cmd_rep)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--check", choices=CHECKS, required=True)
    v.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=10_000)
    v.add_argument("--arity", type=int, choices=(2, 3), default=None)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, AmbientMismatchError, HomogeneityError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
