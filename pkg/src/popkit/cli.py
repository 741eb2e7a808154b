"""Command-line interface.

Transform commands (gen/apply/convexify) read and write canonical polygon
documents on stdin/stdout or files, so they compose in pipelines; query
commands (check/pockets/search/family-search) emit JSON reports.

Exit codes: 0 success, 2 validation error, 3 cap/limit status
(convexify cap reached, search DepthExhausted or BitSizeAborted),
64 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import alternating
from .document import (DocumentError, PolygonDocument,
                       classification_to_jsonable, decode, dumps_canonical,
                       encode, family_report_to_jsonable, outcome_to_jsonable,
                       pockets_to_jsonable)
from .geom import GeometryError
from .polygon import classify
from .search import (BIT_SIZE_ABORTED, DEFAULT_BIT_LIMIT, DEPTH_EXHAUSTED,
                     exhaustive_family_search, search_pop_convexification)
from .server import serve_http
from .svg import render_svg
from .transforms import convexify_by_flips, find_pockets, pocket_flip, \
    pocket_flipturn, pop, popturn

USAGE_EXIT = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _add_io(parser, output_only=False):
    if not output_only:
        parser.add_argument("-i", "--input", metavar="FILE",
                            help="polygon document to read (default: stdin)")
    parser.add_argument("-o", "--output", metavar="FILE",
                        help="where to write the result (default: stdout)")


def build_parser() -> _Parser:
    parser = _Parser(prog="popkit", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a polygon document")
    gen_sub = gen.add_subparsers(dest="generator", required=True)
    g_alt = gen_sub.add_parser("alternating", help="build A(x, y, sigma)")
    g_alt.add_argument("--x", required=True, help="comma-separated rationals, e.g. 2,3,1")
    g_alt.add_argument("--y", required=True, help="comma-separated rationals")
    g_alt.add_argument("--sigma", required=True, help="sign string over {+,-}, e.g. ++---+")
    _add_io(g_alt, output_only=True)
    for kind in ("p1", "p2"):
        g = gen_sub.add_parser(kind, help=f"stock example {kind.upper()} for a given k")
        g.add_argument("--k", type=int, required=True)
        _add_io(g, output_only=True)

    apply_p = sub.add_parser("apply", help="apply one transformation")
    apply_sub = apply_p.add_subparsers(dest="operation", required=True)
    for op in ("pop", "popturn"):
        a = apply_sub.add_parser(op, help=f"{op} one vertex (0-based index)")
        a.add_argument("--vertex", type=int, required=True)
        _add_io(a)
    for op in ("flip", "flipturn"):
        a = apply_sub.add_parser(op, help=f"pocket {op} by pocket index")
        a.add_argument("--pocket", type=int, required=True,
                       help="index into the `pockets` listing")
        _add_io(a)

    check = sub.add_parser("check", help="print the classification report")
    _add_io(check)

    pockets_p = sub.add_parser("pockets", help="list pockets of a simple polygon")
    _add_io(pockets_p)

    conv = sub.add_parser("convexify", help="flip pockets until convex")
    conv.add_argument("--mode", choices=("flip", "flipturn"), default="flip")
    conv.add_argument("--strategy", choices=("first", "largest-lid", "seeded-random"),
                      default="first")
    conv.add_argument("--cap", type=int, default=100000)
    conv.add_argument("--seed", type=int, default=0)
    _add_io(conv)

    search = sub.add_parser("search", help="shortest pop sequence to a convex state")
    search.add_argument("--max-depth", type=int, default=6)
    search.add_argument("--bit-limit", type=int, default=DEFAULT_BIT_LIMIT)
    search.add_argument("--forbid-coincident", action="store_true",
                        help="discard states with coincident non-adjacent vertices")
    _add_io(search)

    fam = sub.add_parser("family-search", help="classify all sign states of A(x, y, .)")
    fam.add_argument("--x", required=True)
    fam.add_argument("--y", required=True)
    _add_io(fam, output_only=True)

    render = sub.add_parser("render", help="render the polygon as SVG")
    render.add_argument("--no-axes", action="store_true")
    render.add_argument("--no-labels", action="store_true")
    render.add_argument("--size", type=int, default=600)
    _add_io(render)

    serve = sub.add_parser("serve", help="run the local HTTP service")
    serve.add_argument("--port", type=int, default=None,
                       help="default: POPKIT_PORT or 8765")
    serve.add_argument("--host", default="127.0.0.1")
    return parser


def _read_doc(args) -> PolygonDocument:
    path = getattr(args, "input", None)
    if path:
        with open(path, "rb") as fh:
            data = fh.read()
    else:
        data = sys.stdin.buffer.read()
    return decode(data)


def _write(args, payload: bytes) -> None:
    path = getattr(args, "output", None)
    if path:
        with open(path, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()


def _dispatch(args) -> int:
    if args.command == "gen":
        if args.generator == "alternating":
            spec = alternating.AlternatingSpec(
                alternating.parse_vector(args.x),
                alternating.parse_vector(args.y),
                alternating.parse_sigma(args.sigma))
        else:
            spec = alternating.canonical_example(args.generator.upper(), args.k)
        _write(args, encode(alternating.build(spec)))
        return 0

    if args.command == "apply":
        doc = _read_doc(args)
        if args.operation in ("pop", "popturn"):
            op = pop if args.operation == "pop" else popturn
            result = op(doc.polygon, args.vertex)
        else:
            pockets = find_pockets(doc.polygon)
            if not 0 <= args.pocket < len(pockets):
                raise GeometryError(
                    f"pocket index {args.pocket} out of range, polygon has {len(pockets)} pockets")
            op = pocket_flip if args.operation == "flip" else pocket_flipturn
            result = op(doc.polygon, pockets[args.pocket])
        _write(args, encode(doc.with_polygon(result)))
        return 0

    if args.command == "check":
        doc = _read_doc(args)
        _write(args, dumps_canonical(classification_to_jsonable(classify(doc.polygon))))
        return 0

    if args.command == "pockets":
        doc = _read_doc(args)
        _write(args, dumps_canonical(pockets_to_jsonable(find_pockets(doc.polygon))))
        return 0

    if args.command == "convexify":
        doc = _read_doc(args)
        result = convexify_by_flips(doc.polygon, mode=args.mode, strategy=args.strategy,
                                    cap=args.cap, seed=args.seed)
        _write(args, encode(doc.with_polygon(result.polygon)))
        if result.converged:
            print(f"convexified in {result.operations} {args.mode} operations",
                  file=sys.stderr)
            return 0
        print(f"cap of {args.cap} operations reached without convexifying",
              file=sys.stderr)
        return 3

    if args.command == "search":
        doc = _read_doc(args)
        outcome = search_pop_convexification(
            doc.polygon, max_depth=args.max_depth, bit_limit=args.bit_limit,
            allow_coincident=not args.forbid_coincident)
        _write(args, dumps_canonical(outcome_to_jsonable(outcome)))
        return 3 if outcome.status in (DEPTH_EXHAUSTED, BIT_SIZE_ABORTED) else 0

    if args.command == "family-search":
        report = exhaustive_family_search(
            alternating.parse_vector(args.x), alternating.parse_vector(args.y))
        _write(args, dumps_canonical(family_report_to_jsonable(report)))
        return 0

    if args.command == "render":
        doc = _read_doc(args)
        _write(args, render_svg(doc.polygon, show_axes=not args.no_axes,
                                label_vertices=not args.no_labels,
                                canvas_size=args.size))
        return 0

    if args.command == "serve":
        print(f"popkit service listening on {args.host}:{args.port or 'default'}",
              file=sys.stderr)
        serve_http(port=args.port, host=args.host)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    try:
        return _dispatch(args)
    except (DocumentError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
