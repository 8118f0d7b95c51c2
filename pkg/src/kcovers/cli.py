"""Command-line front end.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
2 bad arguments, 3 refused by a resource cap, 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .counting import class_counts, count_ordered_covers, count_unordered_covers
from .errors import ArgumentError, ConsistencyError, KCoverError, ResourceCapError
from .labelings import ell0
from .oracle import MAX_LABELING_K, brute_force_labelings
from .reliability import CoherentSystem, count_coherent_designs
from .stirling import build_table
from .symmetry import BranchingSet, classes_to_json, partition_classes


def _default_threads() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def _branching(choice: str, k: int) -> BranchingSet:
    if choice.startswith("@"):
        try:
            T = BranchingSet.from_file(choice[1:])
        except OSError as exc:
            raise ArgumentError(f"cannot read branching set: {exc}") from None
        if T.k != k:
            raise ArgumentError(f"branching set file has k={T.k}, expected {k}")
        return T
    return BranchingSet.preset(choice, k)


def _read_system(path: str) -> CoherentSystem:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ArgumentError(f"cannot read {path}: {exc}") from None
    return CoherentSystem.from_json(text)


def _parse_state(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise ArgumentError(f"state must be a comma-separated list of integers: {text!r}") from None


def cmd_table(args, out):
    build_table(args.kind, args.max_n).write_csv(out, header=args.header)


def cmd_count_labelings(args, out):
    k = args.k
    T = _branching(args.branching, k)
    if args.oracle and k > MAX_LABELING_K:
        raise ResourceCapError(f"the brute-force cross-check supports k <= {MAX_LABELING_K}")
    result = class_counts(k, T, workers=args.threads)
    F = result.totals()
    lo = ell0(k)
    doc = {"k": k, "l0": lo, "F": {str(l): str(v) for l, v in F.items() if l >= lo}}
    if args.per_class:
        doc.update(result.to_dict())
    if args.oracle:
        expected = brute_force_labelings(k, workers=args.threads)
        got = {l: v for l, v in F.items() if v}
        if got != expected:
            raise ConsistencyError(f"pipeline {got} disagrees with brute force {expected}")
        doc["oracle"] = "agree"
    print(json.dumps(doc), file=out)


def cmd_count_covers(args, out):
    fn = count_unordered_covers if args.unordered else count_ordered_covers
    print(fn(args.n, args.k), file=out)


def cmd_coherent(args, out):
    if args.action == "count":
        print(count_coherent_designs(args.n, args.k), file=out)
    elif args.action == "cuts":
        system = _read_system(args.input).with_cuts()
        print(system.to_json(), file=out)
    else:
        system = _read_system(args.input)
        z = _parse_state(args.state)
        by_paths = system.phi_paths(z)
        by_cuts = system.phi_cuts(z)
        if by_paths != by_cuts:
            raise ConsistencyError(f"path form gives {by_paths}, cut form gives {by_cuts}")
        print(json.dumps({"state": z, "phi_paths": by_paths, "phi_cuts": by_cuts}), file=out)


def cmd_classes(args, out):
    T = _branching(args.branching, args.k)
    print(classes_to_json(T, partition_classes(T)), file=out)


def cmd_ell0(args, out):
    print(ell0(args.k), file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kcovers", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="Stirling or integrated Stirling triangle as CSV")
    p.add_argument("--kind", choices=["stirling", "isn"], required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--header", action="store_true", help="emit an n,l,value header line")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("count-labelings", help="|F(k,l)| for every l, as JSON")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--branching", default="low-weight",
                   help="prefix, low-weight or @FILE with one e/c string per line")
    p.add_argument("--per-class", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check by brute force (k <= 5)")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.set_defaults(func=cmd_count_labelings)

    p = sub.add_parser("count-covers", help="number of constructive k-covers of an n-set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--unordered", action="store_true")
    p.set_defaults(func=cmd_count_covers)

    p = sub.add_parser("coherent", help="coherent-system designs, cut sets and structure functions")
    csub = p.add_subparsers(dest="action", required=True)
    c = csub.add_parser("count")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c = csub.add_parser("cuts")
    c.add_argument("--input", required=True, help="system JSON file, or - for stdin")
    c = csub.add_parser("eval")
    c.add_argument("--input", required=True)
    c.add_argument("--state", required=True, help="component states, e.g. 1,1,0")
    p.set_defaults(func=cmd_coherent)

    p = sub.add_parser("classes", help="equivalence classes of branching assignments, as JSON")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--branching", default="low-weight")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("ell0", help="minimum number of non-empty regions")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_ell0)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return 2
    try:
        args.func(args, out)
    except KCoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except RecursionError:
        print("error: instance too large for the search", file=sys.stderr)
        return 3
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))
