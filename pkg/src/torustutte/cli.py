"""Command-line interface: ``torustutte <command> ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures as fx
from .checks import CHECKS, run_checks
from .gaingraph import GraphError
from .golden import GoldenNumber, format_golden
from .graphio import GraphDocument, ParseError, load, load_corpus, save, serialize
from .ribbon import dual, faces
from .statesum import (
    ResourceCapError,
    chrom_poly_top,
    dc_eval,
    eval_R5,
    eval_R10,
    eval_Rr,
    flow_poly_top,
    full_poly,
)
from .trace import trace

EXIT_OK, EXIT_CHECK_FAILED, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3


def _fmt(value) -> str:
    if isinstance(value, GoldenNumber):
        return format_golden(value)
    return format(float(value), ".12g")


def _need_ribbon(doc: GraphDocument):
    R = doc.ribbon
    if R is None:
        raise ParseError(f"{doc.name or 'graph'}: this command needs a 'rotation' field")
    return R


def cmd_poly(args) -> int:
    doc = load(args.graph)
    if args.method == "dc":
        if args.which == "c":
            raise SystemExit("deletion-contraction supports --which ptilde|p only")
        poly = dc_eval(doc.graph, args.which)
    else:
        fn = {"ptilde": full_poly, "p": flow_poly_top, "c": chrom_poly_top}[args.which]
        poly = fn(doc.graph, jobs=args.jobs)
    print(poly)
    return EXIT_OK


def cmd_eval(args) -> int:
    doc = load(args.graph)
    if args.which == "r5":
        print(_fmt(eval_R5(doc.graph, jobs=args.jobs)))
    elif args.which == "r10":
        print(_fmt(eval_R10(doc.graph, jobs=args.jobs)))
    else:
        if args.r is None:
            raise SystemExit("--which rr needs --r N")
        print(_fmt(eval_Rr(doc.graph, args.r, jobs=args.jobs)))
    return EXIT_OK


def cmd_trace(args) -> int:
    R = _need_ribbon(load(args.graph))
    result = trace(R, args.r)
    print(_fmt(result.value))
    for j, v in sorted(result.per_label.items()):
        print(f"  label {j}: {_fmt(v)}")
    return EXIT_OK


def cmd_dual(args) -> int:
    doc = load(args.graph)
    D = dual(_need_ribbon(doc))
    out = GraphDocument.from_ribbon(f"{doc.name}_dual", D, ["cellulation"])
    sys.stdout.write(serialize(out))
    return EXIT_OK


def cmd_faces(args) -> int:
    doc = load(args.graph)
    R = _need_ribbon(doc)
    from .ribbon import dart_token

    for k, f in enumerate(faces(R)):
        walk = " ".join(dart_token(R.base, h) for h in f.walk) or "(isolated vertex)"
        kind = "trivial" if f.trivial else "essential"
        print(f"face {k}: class=({f.homology_class[0]},{f.homology_class[1]}) {kind}: {walk}")
    return EXIT_OK


def cmd_check(args) -> int:
    docs = load_corpus(args.corpus)
    rows = run_checks(args.which, docs, jobs=args.jobs)
    width = max((len(r.graph) for r in rows), default=5)
    failed = 0
    for row in rows:
        failed += row.status == "fail"
        print(f"{row.graph:<{width}}  {row.check:<14} {row.status.upper():<4}  {row.detail}")
    passed = sum(r.status == "pass" for r in rows)
    print(f"{passed} passed, {failed} failed, {len(rows) - passed - failed} skipped")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_fixtures(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, R in fx.corpus().items():
        save(GraphDocument.from_ribbon(name, R, fx.TAGS.get(name, [])), out / f"{name}.json")
        print(out / f"{name}.json")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torustutte", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_graph(p):
        p.add_argument("graph", help="graph document (JSON); '.json' may be omitted")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for state sums")
        return p

    p = with_graph(sub.add_parser("poly", help="state-sum polynomial"))
    p.add_argument("--which", choices=["ptilde", "p", "c"], default="p")
    p.add_argument("--method", choices=["brute", "dc"], default="brute")
    p.set_defaults(func=cmd_poly)

    p = with_graph(sub.add_parser("eval", help="sector evaluation R5, R10 or R_r"))
    p.add_argument("--which", choices=["r5", "r10", "rr"], default="r5")
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_eval)

    p = with_graph(sub.add_parser("trace", help="SO(3) trace from surround loops"))
    p.add_argument("--r", type=int, default=5)
    p.set_defaults(func=cmd_trace)

    p = with_graph(sub.add_parser("dual", help="dual cellulation as a graph document"))
    p.set_defaults(func=cmd_dual)

    p = with_graph(sub.add_parser("faces", help="face tracing"))
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("check", help="verify an identity over a corpus")
    p.add_argument("which", choices=sorted(CHECKS))
    p.add_argument("corpus", nargs="?", help="directory of graph documents or a single file")
    p.add_argument("--corpus", dest="corpus_opt")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fixtures", help="write the built-in fixture corpus")
    p.add_argument("--out", default="fixtures")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check":
        args.corpus = args.corpus_opt or args.corpus
        if not args.corpus:
            parser.error("check needs a corpus directory")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
