"""Command line front end.

Exit codes: 0 success, 1 input/flag/budget error, 2 not a tree or not an
increasing tree, 3 formula and oracle disagree.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import graph as wg
from .assoc import ass_power, astab
from .covers import cover_key, enumerate_vertex_covers, strong_covers
from .errors import (
    NotATree,
    NotIncreasingTree,
    PreconditionError,
    SearchSpaceTooLarge,
    TreeIdealError,
)
from .generate import random_increasing_tree, random_tree
from .increasing import is_increasing_tree, valid_roots
from .oracle import DEFAULT_BUDGET, associated_primes, edge_ideal, ideal_power

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 1, 2, 3


class CLIError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="incwtree", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                        help="cap on the number of exponent vectors the oracle may search")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="report tree / increasing status")
    p.add_argument("file")
    p = sub.add_parser("roots", parents=[common], help="list the valid roots")
    p.add_argument("file")

    p = sub.add_parser("covers", parents=[common], help="list vertex covers")
    p.add_argument("file")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--strong", dest="kind", action="store_const", const="strong")
    kind.add_argument("--minimal", dest="kind", action="store_const", const="minimal")
    kind.add_argument("--all", dest="kind", action="store_const", const="all")
    p.set_defaults(kind="all")

    for name, helptext in (("ass", "associated primes of I^t"), ("oracle-ass", "same as ass --oracle")):
        p = sub.add_parser(name, parents=[common, budget], help=helptext)
        p.add_argument("file")
        p.add_argument("--t", type=_positive, required=True)
        if name == "ass":
            p.add_argument("--oracle", action="store_true", help="use the brute-force monomial oracle")

    p = sub.add_parser("astab", parents=[common], help="stable set and index of stability")
    p.add_argument("file")

    p = sub.add_parser("verify", parents=[common, budget], help="compare formula and oracle for t = 1..tmax")
    p.add_argument("file")
    p.add_argument("--tmax", type=_positive, required=True)

    p = sub.add_parser("random", parents=[common], help="emit a random labeled tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--wmax", type=_positive, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--increasing", action="store_true", help="resample until the tree has a root")
    return parser


def _fmt_set(vs: Sequence[str]) -> str:
    return "{" + ",".join(vs) + "}"


def _load(path: str) -> wg.WeightedGraph:
    try:
        return wg.load_graph(path)
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror or exc}") from None


def _require_tree(G: wg.WeightedGraph) -> None:
    if not wg.is_tree(G):
        raise NotATree("input graph is not a tree")


def _require_increasing(G: wg.WeightedGraph) -> None:
    _require_tree(G)
    if not is_increasing_tree(G):
        raise NotIncreasingTree("input tree is not an increasing weighted tree")


def cmd_validate(args):
    G = _load(args.file)
    tree = wg.is_tree(G)
    roots = list(valid_roots(G)) if tree else []
    status = "not a tree" if not tree else ("increasing" if roots else "not increasing")
    report = {
        "vertices": G.n,
        "edges": G.m,
        "is_tree": tree,
        "increasing": bool(roots),
        "roots": roots,
        "status": status,
    }
    table = [f"vertices: {G.n}", f"edges: {G.m}", f"status: {status}", f"roots: {_fmt_set(roots)}"]
    return report, table, EXIT_OK if tree else EXIT_PRECONDITION


def cmd_roots(args):
    G = _load(args.file)
    _require_tree(G)
    roots = list(valid_roots(G))
    return {"roots": roots}, [_fmt_set(roots)], EXIT_OK


def cmd_covers(args):
    G = _load(args.file)
    if args.kind == "strong":
        _require_increasing(G)
        covers = [r.cover for r in strong_covers(G)]
    else:
        covers = enumerate_vertex_covers(G, minimal_only=args.kind == "minimal")
    return [list(c) for c in covers], [_fmt_set(c) for c in covers], EXIT_OK


def _oracle_primes(G: wg.WeightedGraph, t: int, budget: int) -> list[tuple[str, ...]]:
    primes = associated_primes(ideal_power(edge_ideal(G), t), budget=budget)
    return sorted(primes, key=lambda P: cover_key(G, P))


def cmd_ass(args):
    G = _load(args.file)
    use_oracle = args.command == "oracle-ass" or args.oracle
    if use_oracle:
        primes = _oracle_primes(G, args.t, args.budget)
    else:
        _require_increasing(G)
        primes = list(ass_power(G, args.t).primes)
    report = {"t": args.t, "method": "oracle" if use_oracle else "formula", "primes": [list(P) for P in primes]}
    return report, [f"t = {args.t}"] + [_fmt_set(P) for P in primes], EXIT_OK


def cmd_astab(args):
    G = _load(args.file)
    _require_increasing(G)
    report = astab(G)
    table = [f"astab: {report.astab}"] + [
        f"{_fmt_set(C)}  first power {k}" for C, k in report.per_cover.items()
    ]
    return report.to_json(), table, EXIT_OK


def cmd_verify(args):
    G = _load(args.file)
    _require_increasing(G)
    mismatches = []
    for t in range(1, args.tmax + 1):
        formula = set(ass_power(G, t).primes)
        oracle = set(_oracle_primes(G, t, args.budget))
        if formula != oracle:
            key = lambda P: cover_key(G, P)
            mismatches.append({
                "t": t,
                "formula_only": [list(P) for P in sorted(formula - oracle, key=key)],
                "oracle_only": [list(P) for P in sorted(oracle - formula, key=key)],
            })
    report = {"graph": wg.to_json(G), "tmax": args.tmax, "agree": not mismatches, "mismatches": mismatches}
    table = [f"t = 1..{args.tmax}: " + ("formula and oracle agree" if not mismatches else "MISMATCH")]
    for mm in mismatches:
        table.append(f"t = {mm['t']}: formula only {mm['formula_only']}, oracle only {mm['oracle_only']}")
    return report, table, EXIT_OK if not mismatches else EXIT_MISMATCH


def cmd_random(args):
    if args.n < 2:
        raise CLIError(f"--n must be at least 2, got {args.n}")
    rng = random.Random(args.seed)
    if args.increasing:
        try:
            G, attempts = random_increasing_tree(rng, args.n, args.wmax)
        except RuntimeError as exc:
            raise CLIError(str(exc)) from None
    else:
        G, attempts = random_tree(rng, args.n, args.wmax), 1
    data = wg.to_json(G)
    data["meta"] = {"seed": args.seed, "attempts": attempts, "n": args.n, "wmax": args.wmax,
                    "increasing": args.increasing}
    return data, wg.to_text(G).splitlines(), EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "roots": cmd_roots,
    "covers": cmd_covers,
    "ass": cmd_ass,
    "oracle-ass": cmd_ass,
    "astab": cmd_astab,
    "verify": cmd_verify,
    "random": cmd_random,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, table, code = COMMANDS[args.command](args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SearchSpaceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except TreeIdealError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(table) + "\n")
    if code == EXIT_MISMATCH:
        print("error: formula and oracle disagree", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
