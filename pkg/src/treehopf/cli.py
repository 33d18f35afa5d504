"""Command-line interface.

One command per invocation:

    treehopf product {graft|graft-sigma|insert|insert-sigma} TREE TREE
    treehopf coproduct {ck|cem} FOREST
    treehopf enumerate N
    treehopf sigma TREE
    treehopf verify {SUITE|all}
    treehopf report

Exit codes: 0 success, 1 identity failure, 2 parse error, 3 domain or
resource error, 4 inconclusive verification (a sweep matched no cases).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import DomainError, ResourceLimitError, TreeSyntaxError
from .linear import LinComb
from .trees import enumerate_trees, parse_forest, parse_tree, symmetry_factor
from .ck_hopf import coproduct_ck, graft, graft_sigma
from .cem_hopf import coproduct_cem, insert, insert_sigma
from .verify import SUITES, SweepReport, run_suite

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_INCONCLUSIVE = 4

_PRODUCTS = {
    "graft": graft,
    "graft-sigma": graft_sigma,
    "insert": insert,
    "insert-sigma": insert_sigma,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treehopf",
        description="Exact products, coproducts, and identity verification "
        "on rooted-tree Hopf algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", metavar="PATH", default=None)

    p = sub.add_parser("product", help="pre-Lie product of two trees")
    p.add_argument("op", choices=sorted(_PRODUCTS))
    p.add_argument("left", help="bracket tree, e.g. '[[]]'")
    p.add_argument("right", help="bracket tree")
    add_io(p)

    p = sub.add_parser("coproduct", help="coproduct of a forest")
    p.add_argument("algebra", choices=("ck", "cem"))
    p.add_argument(
        "forest", help="whitespace-separated bracket trees in one argument"
    )
    add_io(p)

    p = sub.add_parser("enumerate", help="all rooted trees with n vertices")
    p.add_argument("n", type=int)
    add_io(p)

    p = sub.add_parser("sigma", help="symmetry factor of a tree")
    p.add_argument("tree")
    add_io(p)

    p = sub.add_parser("verify", help="run an exhaustive identity sweep")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--bound", type=int, default=None, metavar="N")
    p.add_argument("--max-t-edges", type=int, default=None, metavar="N")
    p.add_argument("--max-u-v", type=int, default=None, metavar="N")
    add_io(p)

    p = sub.add_parser(
        "report",
        help="run every sweep and write JSON, CSV, and a summary figure",
    )
    p.add_argument("--bound", type=int, default=None, metavar="N")
    p.add_argument("--max-t-edges", type=int, default=None, metavar="N")
    p.add_argument("--max-u-v", type=int, default=None, metavar="N")
    p.add_argument("--out", metavar="PATH", default="reports")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def _render_comb(comb: LinComb, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(comb.to_json_obj())
    return comb.to_text()


def _report_lines(reports: list[SweepReport]) -> str:
    lines = []
    for r in reports:
        lines.append(
            f"{r.identity}: {r.status.upper()} (cases={r.cases}, {r.millis} ms)"
        )
        for failure in r.failures[:3]:
            lines.append(f"  counterexample: {json.dumps(failure)}")
        if len(r.failures) > 3:
            lines.append(f"  ... {len(r.failures) - 3} more")
    return "\n".join(lines)


def _verify_exit(reports: list[SweepReport]) -> int:
    if any(r.failures for r in reports):
        return EXIT_FAILURE
    if any(r.inconclusive for r in reports):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except TreeSyntaxError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, ResourceLimitError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOMAIN


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "product":
        result = _PRODUCTS[args.op](parse_tree(args.left), parse_tree(args.right))
        _emit(_render_comb(result, args.format), args.out)
        return EXIT_OK

    if args.command == "coproduct":
        forest = parse_forest(args.forest)
        result = coproduct_ck(forest) if args.algebra == "ck" else coproduct_cem(forest)
        _emit(_render_comb(result, args.format), args.out)
        return EXIT_OK

    if args.command == "enumerate":
        if args.n < 1:
            raise DomainError(f"vertex count must be >= 1, got {args.n}")
        encodings = [t.encoding for t in enumerate_trees(args.n)]
        if args.format == "json":
            _emit(json.dumps(encodings), args.out)
        else:
            _emit("\n".join(encodings), args.out)
        return EXIT_OK

    if args.command == "sigma":
        value = symmetry_factor(parse_tree(args.tree))
        if args.format == "json":
            _emit(json.dumps({"tree": parse_tree(args.tree).encoding, "sigma": value}), args.out)
        else:
            _emit(str(value), args.out)
        return EXIT_OK

    if args.command == "verify":
        reports = run_suite(args.suite, args.bound, args.max_t_edges, args.max_u_v)
        if args.format == "json":
            _emit(json.dumps([r.to_json_obj() for r in reports]), args.out)
        else:
            _emit(_report_lines(reports), args.out)
        return _verify_exit(reports)

    if args.command == "report":
        from .report import run_report

        reports, paths = run_report(
            args.out,
            bound=args.bound,
            max_t_edges=args.max_t_edges,
            max_uv_vertices=args.max_u_v,
        )
        print(_report_lines(reports))
        for path in paths:
            print(f"wrote {path}")
        return _verify_exit(reports)

    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
