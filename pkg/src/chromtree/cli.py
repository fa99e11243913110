"""Command-line front end.

Exit codes: 0 success, 1 verification failure or unexpected collision, 2 input error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import search
from .formats import (
    ParseError,
    caterpillar_from_arg,
    crab_from_arg,
    parse_bivariate,
    parse_edge_list,
    parse_symfunc,
    spider_from_arg,
    squid_from_arg,
)
from .graphs import canonical_tree_code, enumerate_family, enumerate_trees, is_tree
from .invariants import (
    connector_from_csf,
    connector_polynomial_direct,
    csf,
    girth_from_csf,
    sequences_from_stp,
    subtree_from_csf,
    subtree_polynomial_direct,
)
from .reconstruct import (
    ReconstructionError,
    caterpillar_from_csf,
    crab_from_csf,
    spider_from_stp,
    spider_from_two_part,
    squid_from_csf,
)

OK, FAILED, INPUT_ERROR = 0, 1, 2

EPILOG = f"""\
verbs:
  xg GRAPH                 chromatic symmetric function in the p basis
  stp TREE                 subtree polynomial S(q,r), by direct enumeration
  conn TREE                connector polynomial K(x,y), by direct enumeration
  from-xg WHAT XFILE       stp | conn | girth | sequences computed from X alone
  reconstruct KIND FILE    spider-stp | spider-2part | caterpillar | squid | crab
  scan {{trees,graphs}}      collision search (--max-n, --invariant csf|stp)
  verify {{main-thm,identities}}  exhaustive identity sweeps (--max-n)
  conjecture               sign and integrality tables (--max-n)
  enumerate FAMILY --n N   trees | spiders | caterpillars | squids | crabs

GRAPH and TREE are edge-list files ('-' for stdin) or an inline spec:
  --spider 3,2,1  --caterpillar 1,2,3  --squid 3:2,1  --crab 3:1,2,3

Set {search.WORKERS_ENV}=K (or pass --workers K) to spread scans over K processes.
"""


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("graphfile", nargs="?", help="edge-list file, '-' for stdin")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--spider", metavar="LEGS")
    group.add_argument("--caterpillar", metavar="F0,...,FS")
    group.add_argument("--squid", metavar="G:TENTACLES")
    group.add_argument("--crab", metavar="G:F1,...,FG")


def _graph_from_args(args):
    builders = {
        "spider": spider_from_arg,
        "caterpillar": caterpillar_from_arg,
        "squid": squid_from_arg,
        "crab": crab_from_arg,
    }
    inline = [(k, getattr(args, k)) for k in builders if getattr(args, k)]
    if inline and args.graphfile:
        raise InputError("give either a graph file or an inline spec, not both")
    if inline:
        kind, text = inline[0]
        return builders[kind](text).build()
    if not args.graphfile:
        raise InputError("no graph given")
    return parse_edge_list(_read(args.graphfile), source=args.graphfile)


def _tree_from_args(args):
    t = _graph_from_args(args)
    if not is_tree(t):
        raise InputError("this verb needs a tree")
    return t


def _xg_from_file(path: str):
    x = parse_symfunc(_read(path), source=path)
    if x.basis != "P":
        raise InputError("expected X in the p basis")
    return x


def _cmd_xg(args, out):
    out.write(csf(_graph_from_args(args)).to_text())
    return OK


def _cmd_stp(args, out):
    out.write(subtree_polynomial_direct(_tree_from_args(args)).to_text())
    return OK


def _cmd_conn(args, out):
    out.write(connector_polynomial_direct(_tree_from_args(args)).to_text())
    return OK


def _format_girth(g) -> str:
    return "inf" if g == math.inf else str(g)


def _cmd_from_xg(args, out):
    x = _xg_from_file(args.xgfile)
    try:
        if args.what == "stp":
            out.write(subtree_from_csf(x).to_text())
        elif args.what == "conn":
            out.write(connector_from_csf(x).to_text())
        elif args.what == "girth":
            out.write(_format_girth(girth_from_csf(x)) + "\n")
        else:
            seq = sequences_from_stp(subtree_from_csf(x), x.degree)
            for name, values in (("path", seq.path_seq), ("star", seq.star_seq), ("degree", seq.degree_seq)):
                out.write(name + " " + " ".join(map(str, values)) + "\n")
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return OK


def _stp_input(path: str):
    """Subtree polynomial and order, from either an S file or an X file."""
    text = _read(path)
    if "[" in text:
        x = _xg_from_file(path)
        return subtree_from_csf(x), x.degree
    s = parse_bivariate(text, source=path)
    return s, s.degree_in_first() + 1


def _cmd_reconstruct(args, out):
    if args.kind == "spider-stp":
        s, n = _stp_input(args.file)
        result = spider_from_stp(s, n, method=args.method)
        out.write(f"spider{result}\n")
        return OK
    x = _xg_from_file(args.file)
    if args.kind == "spider-2part":
        out.write(f"spider{spider_from_two_part(x, x.degree)}\n")
    elif args.kind == "caterpillar":
        out.write(f"{caterpillar_from_csf(x)}\n")
    elif args.kind == "squid":
        out.write(f"{squid_from_csf(x)}\n")
    else:
        out.write(f"{crab_from_csf(x)}\n")
    return OK


def _emit_report(report, args, out) -> None:
    out.write(report.to_text(timing=not args.no_timing))
    if args.jsonl:
        with open(args.jsonl, "w", encoding="utf-8") as fh:
            fh.write(report.to_jsonl())


# collisions at or below these orders mean something is wrong
NONE_EXPECTED = {("trees", "csf"): math.inf, ("trees", "stp"): 10, ("graphs", "csf"): 4}


def _cmd_scan(args, out):
    if args.family == "trees":
        report = search.distinguishability_scan(args.max_n, args.invariant, min_n=args.min_n, force=args.force)
    else:
        if args.invariant != "csf":
            raise InputError("graph scans only support --invariant csf")
        report = search.graph_collision_scan(args.max_n, min_n=args.min_n, force=args.force)
    _emit_report(report, args, out)
    limit = math.inf if args.expect_none else NONE_EXPECTED[(args.family, args.invariant)]
    return FAILED if any(f.order <= limit for f in report.collisions) else OK


def _cmd_verify(args, out):
    report = search.identity_sweep(args.max_n, which=args.which, force=args.force)
    _emit_report(report, args, out)
    return FAILED if report.failures else OK


def _cmd_conjecture(args, out):
    report = search.conjecture_scan(args.max_n, force=args.force)
    _emit_report(report, args, out)
    return FAILED if report.failures else OK


def _cmd_enumerate(args, out):
    if args.n < 1:
        raise InputError("--n must be positive")
    if args.family == "trees":
        for t in enumerate_trees(args.n):
            out.write(canonical_tree_code(t) + "\n")
    else:
        for spec in enumerate_family(args.family, args.n):
            out.write(f"{spec}\n")
    return OK


def _report_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jsonl", metavar="PATH", help="also write one JSON record per finding")
    p.add_argument("--no-timing", action="store_true", help="omit the elapsed line")
    p.add_argument("--force", action="store_true", help="allow --max-n above the default cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromtree",
        description="Chromatic symmetric functions of trees and small graphs.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--workers", type=int, help=f"worker processes for scans (sets {search.WORKERS_ENV})")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    for verb, fn, help_text in (
        ("xg", _cmd_xg, "print X in the p basis"),
        ("stp", _cmd_stp, "print the subtree polynomial"),
        ("conn", _cmd_conn, "print the connector polynomial"),
    ):
        p = sub.add_parser(verb, help=help_text)
        _add_graph_source(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("from-xg", help="invariants computed from an X file")
    p.add_argument("what", choices=["stp", "conn", "girth", "sequences"])
    p.add_argument("xgfile")
    p.set_defaults(func=_cmd_from_xg)

    p = sub.add_parser("reconstruct", help="recover a family member from its invariant")
    p.add_argument("kind", choices=["spider-stp", "spider-2part", "caterpillar", "squid", "crab"])
    p.add_argument("file", help="X file (p basis); spider-stp also accepts an S file")
    p.add_argument("--method", choices=["literal", "direct"], default="literal", help="leg-count recursion for spider-stp")
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("scan", help="search for invariant collisions")
    p.add_argument("family", choices=["trees", "graphs"])
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--invariant", choices=["csf", "stp"], default="csf")
    p.add_argument("--expect-none", action="store_true", help="treat any collision as a failure")
    _report_options(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verify", help="exhaustive identity sweeps")
    p.add_argument("which", choices=["main-thm", "identities"])
    p.add_argument("--max-n", type=int, required=True)
    _report_options(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("conjecture", help="sign and integrality tables")
    p.add_argument("--max-n", type=int, required=True)
    _report_options(p)
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("enumerate", help="list trees or family members of a given order")
    p.add_argument("family", choices=["trees", "spiders", "caterpillars", "squids", "crabs"])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_enumerate)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    if args.workers is not None:
        os.environ[search.WORKERS_ENV] = str(args.workers)
    try:
        return args.func(args, out)
    except (ParseError, InputError, search.BoundError) as exc:
        err.write(f"error: {exc}\n")
        return INPUT_ERROR
    except ReconstructionError as exc:
        err.write(f"reconstruction failed: {exc}\n")
        return FAILED
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return INPUT_ERROR


def main() -> None:
    sys.exit(run())
