"""Command-line interface.

Exit codes: 0 the command ran to completion (verdicts are in the JSON
output), 2 invalid input, 3 a resource cap was hit, 4 the suite recorded a
failing check.  ICX_THREADS caps suite parallelism.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .complexes import find_shelling, independence_complex, is_unmixed, verify_shelling
from .decomposability import is_vertex_decomposable, shedding_vertices
from .errors import IcxError, ResourceCapExceeded
from .graph import is_chordal
from .homology import is_cohen_macaulay
from .io import (
    load_family,
    load_graph,
    parse_order,
    serialize_graph,
    serialize_order,
    _load,
    _save,
)
from .ops import (
    cartesian_product,
    corona,
    disjoint_union,
    join,
    lexicographic_product,
    rooted_product,
)
from .shellings import corona_shelling, find_shell2_shelling, lexicographic_shelling
from .suite import SuiteConfig, run_suite


def _emit(data) -> None:
    json.dump(data, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_check(args) -> int:
    g = load_graph(args.graph)
    prop = args.prop
    if prop == "vd":
        res = is_vertex_decomposable(g)
        out = {"prop": "vd", "value": res.decomposable}
        if args.witness:
            out["witness"] = res.witness.to_json() if res.witness else None
    elif prop == "shellable":
        order = find_shelling(independence_complex(g))
        out = {"prop": "shellable", "value": order is not None}
        if args.witness:
            out["witness"] = serialize_order(order) if order else None
    elif prop == "cm":
        res = is_cohen_macaulay(g)
        out = {"cm": res.cm, "witness": None}
        if res.witness is not None:
            face, degree = res.witness
            out["witness"] = {"face": list(face), "degree": degree}
    elif prop == "unmixed":
        out = {"prop": "unmixed", "value": is_unmixed(g)}
    elif prop == "chordal":
        out = {"prop": "chordal", "value": is_chordal(g)}
    elif prop == "shedding":
        out = {"prop": "shedding", "value": list(shedding_vertices(g))}
    else:  # pragma: no cover - argparse restricts choices
        raise IcxError(f"unknown property {prop!r}")
    _emit(out)
    return 0


def _cmd_op(args) -> int:
    kind = args.kind
    if kind in ("union", "join", "cartesian"):
        if not args.lhs or not args.rhs:
            raise IcxError(f"--kind {kind} needs --lhs and --rhs graph files")
        g, h = load_graph(args.lhs), load_graph(args.rhs)
        fn = {"union": disjoint_union, "join": join, "cartesian": cartesian_product}[kind]
        result = fn(g, h)
    else:
        if not args.family:
            raise IcxError(f"--kind {kind} needs --family")
        fam = load_family(args.family)
        fn = {"rooted": rooted_product, "corona": corona, "lex": lexicographic_product}[kind]
        result = fn(fam)
    data = serialize_graph(result)
    if args.output:
        _save(data, args.output)
    else:
        _emit(data)
    return 0


def _component_orders(fam):
    orders = {}
    for x, h, _ in fam.assign:
        order = find_shelling(independence_complex(h))
        if order is None:
            raise IcxError(f"the graph assigned to {x!r} has no shelling")
        orders[x] = order
    return orders


def _cmd_shelling(args) -> int:
    fam = load_family(args.family)
    if args.construct == "corona":
        order = corona_shelling(fam, _component_orders(fam))
        product = corona(fam)
    else:
        from .graph import is_complete

        complete_at = {x for x, h, _ in fam.assign if is_complete(h)}
        if args.base_order:
            base_order = parse_order(_load(args.base_order))
        else:
            base_order = find_shell2_shelling(fam.base, complete_at)
        if base_order is None:
            _emit(
                {
                    "order": None,
                    "verified": False,
                    "reason": "no base shelling satisfies the pair condition",
                }
            )
            return 0
        order = lexicographic_shelling(fam, base_order, _component_orders(fam))
        product = lexicographic_product(fam)
    verdict = verify_shelling(independence_complex(product), order)
    _emit({"order": serialize_order(order), "verified": verdict.ok})
    return 0


def _cmd_suite(args) -> int:
    cfg = SuiteConfig(seed=args.seed, mutate=args.mutate)
    if args.max_n is not None:
        n = args.max_n
        cfg = replace(
            cfg,
            join_exhaustive_n=min(cfg.join_exhaustive_n, n),
            union_left_n=min(cfg.union_left_n, n),
            union_right_n=min(cfg.union_right_n, max(n - 1, 1)),
            lex_exhaustive_base_max=min(cfg.lex_exhaustive_base_max, n),
            lex_member_max=min(cfg.lex_member_max, n),
            chordal_max_n=min(cfg.chordal_max_n, max(n, 2)),
        )
    report = run_suite(cfg)
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        line = f"{status} {c.check_id}: {c.instances} instances"
        if c.failures:
            line += f", {len(c.failures)} failures"
        if c.degraded:
            line += f", {len(c.degraded)} degraded"
        print(line)
    print(f"suite {'passed' if report.passed else 'FAILED'} in {report.seconds}s")
    if args.report:
        _save(report.to_json(), args.report)
    return 0 if report.passed else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icx",
        description="Independence complexes of graphs under graph operations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide a property of a graph file")
    p_check.add_argument(
        "--prop",
        required=True,
        choices=["vd", "shellable", "cm", "unmixed", "chordal", "shedding"],
    )
    p_check.add_argument("--graph", required=True)
    p_check.add_argument("--witness", action="store_true")
    p_check.set_defaults(fn=_cmd_check)

    p_op = sub.add_parser("op", help="apply a graph operation")
    p_op.add_argument(
        "--kind",
        required=True,
        choices=["union", "join", "rooted", "corona", "cartesian", "lex"],
    )
    p_op.add_argument("--lhs")
    p_op.add_argument("--rhs")
    p_op.add_argument("--family")
    p_op.add_argument("-o", "--output")
    p_op.set_defaults(fn=_cmd_op)

    p_shell = sub.add_parser("shelling", help="run a constructive shelling")
    p_shell.add_argument("--construct", required=True, choices=["corona", "lex"])
    p_shell.add_argument("--family", required=True)
    p_shell.add_argument("--base-order")
    p_shell.set_defaults(fn=_cmd_shelling)

    p_suite = sub.add_parser("suite", help="run the claim verification suite")
    p_suite.add_argument("--max-n", type=int, default=None)
    p_suite.add_argument("--seed", type=int, default=0)
    p_suite.add_argument("--report")
    p_suite.add_argument(
        "--mutate", action="store_true", help="self-test: corrupt one check"
    )
    p_suite.set_defaults(fn=_cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ResourceCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except (IcxError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
