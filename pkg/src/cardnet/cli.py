"""Command-line front end: ``cardnet {generate,encode,verify,sizes,arc-check}``.

Exit codes: 0 success, 1 verification or arc-consistency failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import constructions as C
from .cnf import encode_cardinality, write_dimacs
from .network import NetworkError
from .propagation import arc_sweep, subsets_to_check
from .sizes import emit_size_table
from .verify import EXHAUSTIVE_MAX_N, verify_selection_exhaustive, verify_selection_random

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _selection_k(kind, n, k):
    if kind == "max":
        return 1 if k is None else k
    if kind in ("oe-sort", "bit-merge"):
        return n if k is None else k
    if k is None:
        raise NetworkError(f"--k is required for {kind}")
    return k


def cmd_generate(args):
    net = C.build(args.type, args.n, args.k)
    _emit(net.to_text() if args.format == "text" else net.to_json() + "\n", args.out)
    return EXIT_OK


def cmd_encode(args):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        formula = encode_cardinality(args.n, args.bound, args.rel, args.encoding)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    _emit(write_dimacs(formula), args.out)
    return EXIT_OK


def cmd_verify(args):
    k = _selection_k(args.type, args.n, args.k)
    net = C.build(args.type, args.n, args.k)
    name = f"{args.type}(n={args.n}, k={k})"
    if args.exhaustive:
        if net.n > EXHAUSTIVE_MAX_N:
            print(f"error: exhaustive mode is limited to n <= {EXHAUSTIVE_MAX_N}; use --trials",
                  file=sys.stderr)
            return EXIT_USAGE
        report = verify_selection_exhaustive(net, k, name=name)
    else:
        report = verify_selection_random(net, k, args.trials, args.seed, name=name)
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_sizes(args):
    rows = emit_size_table(args.max_log_n, args.out or sys.stdout)
    if args.out:
        print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def cmd_arc_check(args):
    net = C.build(args.type, args.n, args.k)
    samples = None if args.all_subsets else args.samples
    result = arc_sweep(net, args.k, subsets_to_check(args.n, args.k, samples, args.seed))
    for subset, reason in result.failures:
        print(f"FAIL true inputs {list(subset)}: {reason}")
    print(f"{args.type}(n={args.n}, k={args.k}): "
          f"{result.tested - len(result.failures)}/{result.tested} passed")
    return EXIT_OK if result.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cardnet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a comparator network")
    p.add_argument("--type", required=True, choices=sorted(C.BUILDERS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("encode", help="write DIMACS CNF for x_1 + ... + x_n (<|<=) bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--rel", choices=("lt", "le"), default="lt")
    p.add_argument("--encoding", choices=("half", "full"), default="half")
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("verify", help="check the selection property of a network")
    p.add_argument("--type", required=True, choices=sorted(C.BUILDERS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sizes", help="CSV of comparator counts and ratios")
    p.add_argument("--max-log-n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sizes)

    p = sub.add_parser("arc-check", help="check arc-consistency of the half encoding")
    p.add_argument("--type", choices=C.SELECTION_KINDS, default="pw-hbit-sel")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--all-subsets", action="store_true")
    mode.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_arc_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NetworkError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
