"""Command-line interface.

Every command prints one JSON document on standard output.  Exit codes:
0 found / holds, 1 not found / violated (a witness is included),
2 inconclusive (search budget exhausted), 3 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bigraph import GraphError, parse_rational, render_rational
from .conditions import (
    ConditionResult,
    check_condition,
    check_double_sided,
    f_report,
    g_report,
    threshold_main,
    threshold_summary,
)
from .gadgets import tight_family
from .harness import (
    EnumerationBounds,
    property_suite,
    verify_prop_counter,
    verify_theorem_main,
    verify_tree_lemma,
)
from .io import dump_graph, load_graph, to_jsonable
from .solver import SearchBudgetExceeded, find_k_star_covering, find_st_matching

EXIT_OK, EXIT_NO, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational {text!r}: {exc}") from None


def _edge(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"edge must look like 'u,v', got {text!r}") from None
    return u, v


def _read_graph(path: str):
    if path == "-":
        return load_graph(sys.stdin)
    with open(path, encoding="utf-8") as fp:
        return load_graph(fp)


def _emit(obj) -> None:
    print(json.dumps(to_jsonable(obj), sort_keys=True))


def _condition_json(res: ConditionResult) -> dict:
    out = {"ok": res.ok, "alpha": res.alpha}
    if not res.ok:
        out.update(side=res.side, witness=list(res.witness), deficiency=res.deficiency)
    return out


def cmd_check(args) -> int:
    res = check_condition(_read_graph(args.graph), args.alpha)
    _emit(_condition_json(res))
    return EXIT_OK if res else EXIT_NO


def cmd_double_check(args) -> int:
    res = check_double_sided(_read_graph(args.graph), args.alpha)
    _emit(_condition_json(res))
    return EXIT_OK if res else EXIT_NO


def cmd_threshold(args) -> int:
    value = threshold_summary(args.h, args.k) if args.d is None else threshold_main(args.h, args.k, args.d)
    _emit(render_rational(value))
    return EXIT_OK


def cmd_solve(args) -> int:
    G = _read_graph(args.graph)
    try:
        F = find_st_matching(G, args.s, args.t, budget=args.budget)
    except SearchBudgetExceeded as exc:
        _emit({"found": None, "inconclusive": True, "budget": exc.nodes})
        return EXIT_INCONCLUSIVE
    if F is None:
        short = [u for u in range(G.u_count) if G.degree_u(u) < args.s]
        proof = f"left vertices of degree below s: {short}" if short else "exhaustive search"
        _emit({"found": False, "proof": proof})
        return EXIT_NO
    _emit({
        "found": True,
        "edges": F.edges,
        "components": [{"lefts": c.lefts, "rights": c.rights, "edges": c.edge_count} for c in F.components],
    })
    return EXIT_OK


def cmd_star_cover(args) -> int:
    G = _read_graph(args.graph)
    F = find_k_star_covering(G, args.k)
    if F is None:
        res = check_double_sided(G, Fraction(1, args.k))
        _emit({"found": False, "condition": _condition_json(res)})
        return EXIT_NO
    _emit({"found": True, "edges": F.edges})
    return EXIT_OK


def cmd_fg(args) -> int:
    G = _read_graph(args.graph)
    u, v = args.edge
    f, g = f_report(G, u, v, args.alpha), g_report(G, u, v, args.alpha)
    out = {
        "edge": [u, v],
        "alpha": args.alpha,
        "f": f.minimum,
        "f_witness": f.witness,
        "g": g.minimum,
        "g_witness": g.witness,
        "g_family_empty": g.family_empty,
    }
    cond = check_condition(G, args.alpha)
    out["condition"] = cond.ok
    if cond:
        out["redundant"] = f.minimum >= 1
    _emit(out)
    return EXIT_OK


def cmd_gen_tight(args) -> int:
    gadget = tight_family(args.h, args.k, args.d, args.n)
    print(dump_graph(gadget.graph, meta=gadget.metadata()))
    return EXIT_OK


def _bounds(args) -> EnumerationBounds:
    return EnumerationBounds(
        u_max=args.u_max,
        v_max=args.v_max,
        d_max=args.d_max,
        connected_only=args.connected_only,
        dedup=args.dedup,
    )


def _report_exit(report) -> int:
    _emit(report.to_dict(timing=False))
    if not report.passed:
        return EXIT_NO
    return EXIT_INCONCLUSIVE if report.inconclusive else EXIT_OK


def cmd_verify_main(args) -> int:
    extra = [tight_family(args.h, args.k, args.d, n).graph for n in args.inject_tight]
    report = verify_theorem_main(
        args.h, args.k, args.d, _bounds(args),
        alpha=args.alpha, extra_graphs=extra, budget=args.budget,
        workers=args.workers, stream=args.stream,
    )
    return _report_exit(report)


def cmd_verify_counter(args) -> int:
    return _report_exit(verify_prop_counter(args.h, args.k, args.d, args.n, budget=args.budget))


def cmd_verify_tree(args) -> int:
    return _report_exit(verify_tree_lemma(args.alpha, _bounds(args), stream=args.stream))


def cmd_props(args) -> int:
    report = property_suite(args.samples, (args.u_max, args.v_max), args.seed, triples=args.triples)
    return _report_exit(report)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stmatch", description="(s,t)-matchings, neighbourhood conditions and star coverings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_graph(p):
        p.add_argument("graph", nargs="?", default="-", help="graph JSON file (default: standard input)")
        return p

    p = with_graph(sub.add_parser("check", help="alpha-neighbourhood condition on the left side"))
    p.add_argument("--alpha", type=_rational, required=True)
    p.set_defaults(func=cmd_check)

    p = with_graph(sub.add_parser("double-check", help="condition on both sides"))
    p.add_argument("--alpha", type=_rational, required=True)
    p.set_defaults(func=cmd_double_check)

    p = sub.add_parser("threshold", help="sufficient alpha for an (h,hk)-matching")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, help="maximum left degree (omit for the degree-free bound)")
    p.set_defaults(func=cmd_threshold)

    p = with_graph(sub.add_parser("solve", help="find an (s,t)-matching or prove none exists"))
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.set_defaults(func=cmd_solve)

    p = with_graph(sub.add_parser("star-cover", help="find a k-star covering"))
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_star_cover)

    p = with_graph(sub.add_parser("fg", help="f and g values of an edge"))
    p.add_argument("--edge", type=_edge, required=True)
    p.add_argument("--alpha", type=_rational, required=True)
    p.set_defaults(func=cmd_fg)

    p = sub.add_parser("gen-tight", help="tight family graph with metadata")
    for name in ("h", "k", "d", "n"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_gen_tight)

    def with_bounds(p, u_max, v_max, d_max=None):
        p.add_argument("--u-max", type=int, default=u_max)
        p.add_argument("--v-max", type=int, default=v_max)
        p.add_argument("--d-max", type=int, default=d_max)
        p.add_argument("--connected-only", action="store_true")
        p.add_argument("--dedup", choices=("none", "degree-profile", "symmetry"), default="none")
        p.add_argument("--stream", choices=("pruned", "full"), default="pruned")

    p = sub.add_parser("verify-main", help="exhaustive campaign for the main threshold")
    for name in ("h", "k", "d"):
        p.add_argument(f"--{name}", type=int, required=True)
    with_bounds(p, 5, 8, 4)
    p.add_argument("--alpha", type=_rational, help="override the threshold")
    p.add_argument("--inject-tight", type=int, nargs="*", default=[], metavar="N",
                   help="append tight family graphs G_N to the stream")
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify_main)

    p = sub.add_parser("verify-counter", help="check the tight family")
    for name in ("h", "k", "d"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--n", type=int, nargs="+", default=[1, 2, 3])
    p.add_argument("--budget", type=int, default=1_000_000)
    p.set_defaults(func=cmd_verify_counter)

    p = sub.add_parser("verify-tree", help="tree lemma campaign")
    p.add_argument("--alpha", type=_rational, required=True)
    with_bounds(p, 4, 6)
    p.set_defaults(func=cmd_verify_tree)

    p = sub.add_parser("props", help="sampled property suite")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--u-max", type=int, default=12)
    p.add_argument("--v-max", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--triples", type=int, default=10_000)
    p.set_defaults(func=cmd_props)
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        _emit({"error": str(exc), "kind": "usage"})
    except (GraphError, ValueError, TypeError, OSError) as exc:
        _emit({"error": str(exc), "kind": type(exc).__name__})
    return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
