"""Command-line front end.

Exit codes: 0 ok, 1 invalid coloring, 2 input error, 3 no qualified order,
4 oracle budget exceeded.

Colors are 0-based; values reported elsewhere with 1-based colors are one
larger.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from .coloring import (HypothesisViolated, NoQualifiedOrder, NotAPermutation,
                       coloring_from_order, greedy_coloring, hc_via_conditions,
                       lower_bound, verify)
from .families import KINDS, PARAMS, BadParams, FamilySpec, OrderFallbackWarning, generate, grid
from .formats import (ColoringDoc, FileFormatError, TreeDoc, coloring_to_dict, dumps,
                      load_coloring, load_order, load_tree, save_coloring, tree_to_dict)
from .oracle import Inexhaustive, OracleBudget, bfs_order, brute_force_hc, random_tree
from .report import all_agree, analyze, family_table, render

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_NO_ORDER, EXIT_BUDGET = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_range(text: str | None, name: str) -> list[int]:
    """``"3"``, ``"2..5"`` or ``"2,4,6"``."""
    if text is None:
        raise InputError(f"--{name} is required")
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split(".."))
            if hi < lo:
                raise InputError(f"--{name}: empty range {text}")
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"--{name}: cannot parse {text!r}") from None


def _budget(args) -> OracleBudget:
    return OracleBudget(max_n=args.max_n, node_limit=args.node_limit, time_limit=args.time_limit)


def cmd_gen(args) -> int:
    if args.family == "random":
        if args.n is None or args.seed is None:
            raise InputError("random trees need --n and --seed")
        if args.n < 1:
            raise InputError("--n must be >= 1")
        doc = TreeDoc(random_tree(args.n, args.seed))
        doc.family = {"kind": "random", "params": {"n": args.n, "seed": args.seed}}
    else:
        params = {}
        for name in PARAMS[args.family]:
            value = getattr(args, name)
            if value is None:
                raise InputError(f"{args.family} needs --{name}")
            params[name] = value
        spec = FamilySpec.make(args.family, **params)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", OrderFallbackWarning)
            doc = TreeDoc.from_instance(generate(spec))
    _emit(dumps(tree_to_dict(doc)), args.output)
    return EXIT_OK


def cmd_analyze(args) -> int:
    doc = load_tree(args.tree)
    _emit(dumps(analyze(doc.tree)), args.output)
    return EXIT_OK


def cmd_color(args) -> int:
    doc = load_tree(args.tree)
    tree = doc.tree
    try:
        bound = lower_bound(tree)
    except HypothesisViolated:
        bound = None
    code = EXIT_OK
    if args.order == "auto":
        try:
            res = hc_via_conditions(tree, hint=doc.canonical_order)
            order, col, method = res.order, res.coloring, "qualified-order"
        except (HypothesisViolated, NoQualifiedOrder):
            order = bfs_order(tree, tree.center_info.centers)
            col, method = greedy_coloring(tree, order), "greedy-fallback"
            code = EXIT_NO_ORDER
    else:
        if args.order == "canonical":
            order = doc.canonical_order
            if order is None:
                raise InputError("tree file has no canonical order")
        else:
            if not args.order_file:
                raise InputError("--order file needs --order-file")
            order = load_order(args.order_file, tree.n)
        col, method = coloring_from_order(tree, order), "from-order"
    extra = {
        "method": method,
        "order": list(order),
        "lower_bound": bound,
        "optimal": bound is not None and col.span == bound,
        "valid": verify(tree, col).valid,
    }
    doc_out = ColoringDoc(col, extra)
    if args.output:
        save_coloring(args.output, doc_out)
    else:
        sys.stdout.write(dumps(coloring_to_dict(doc_out)))
    return code


def cmd_verify(args) -> int:
    tree = load_tree(args.tree).tree
    col = load_coloring(args.coloring, tree.n).coloring
    rep = verify(tree, col)
    out = {
        "valid": rep.valid,
        "span": col.span,
        "violation_count": len(rep.violations),
        "violations": [list(v) for v in rep.violations],
    }
    _emit(dumps(out), args.output)
    return EXIT_OK if rep.valid else EXIT_INVALID


def cmd_oracle(args) -> int:
    tree = load_tree(args.tree).tree
    try:
        res = brute_force_hc(tree, _budget(args))
    except Inexhaustive as e:
        sys.stderr.write(f"oracle: {e}\n")
        return EXIT_BUDGET
    try:
        bound = lower_bound(tree)
    except HypothesisViolated:
        bound = None
    out = {
        "n": tree.n,
        "hc": res.value,
        "witness": list(res.witness.colors),
        "order": list(res.order),
        "lower_bound": bound,
        "gap": None if bound is None else res.value - bound,
    }
    _emit(dumps(out), args.output)
    return EXIT_OK


def cmd_table(args) -> int:
    ranges = {name: _parse_range(getattr(args, name), name) for name in PARAMS[args.family]}
    specs = grid(args.family, **ranges)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OrderFallbackWarning)
        rows = family_table(specs, _budget(args))
    _emit(render(args.family, rows, args.format), args.output)
    return EXIT_OK if all_agree(rows) else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hamtree", description="Hamiltonian colorings of trees.")
    sub = ap.add_subparsers(dest="command", required=True)

    def budget_flags(p):
        p.add_argument("--max-n", type=int, default=10)
        p.add_argument("--node-limit", type=int)
        p.add_argument("--time-limit", type=float)

    p = sub.add_parser("gen", help="generate a family tree (or a seeded random tree)")
    p.add_argument("--family", required=True, choices=KINDS + ("random",))
    for name in ("k", "d", "m", "n", "seed"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="center, levels, diameter and lower bound")
    p.add_argument("tree")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("color", help="produce a coloring")
    p.add_argument("tree")
    p.add_argument("--order", choices=("auto", "canonical", "file"), default="auto")
    p.add_argument("--order-file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring")
    p.add_argument("tree")
    p.add_argument("coloring")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact hc by exhaustive search")
    p.add_argument("tree")
    budget_flags(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("table", help="closed forms against constructions over a grid")
    p.add_argument("--family", required=True, choices=KINDS)
    for name in ("k", "d", "m"):
        p.add_argument(f"--{name}", help="value, lo..hi or comma list")
    p.add_argument("--format", choices=("csv", "markdown"), default="csv")
    budget_flags(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, BadParams, FileFormatError, NotAPermutation) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
