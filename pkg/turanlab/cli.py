"""
Command line for turanlab
Every subcommand prints one JSON line {"status", "payload", "elapsed_ms"} on
stdout. Domain errors go to stderr as JSON with exit code 1, usage errors
exit with code 2.
"""

import argparse
import json
import logging
import os
import sys
import time
from fractions import Fraction

from turanlab import __version__
from turanlab.catalog import Catalog, lookup_or_compute
from turanlab.config import CATALOG_ENV, LOG_LEVEL, resolve_threads
from turanlab.counting import (
    chromatic_number,
    count_cliques,
    count_copies,
    exists_homomorphism,
)
from turanlab.deletion import greedy_min_copy_deletion
from turanlab.degree import check_degree_lemma
from turanlab.density import check_ratio_monotone, density_bracket
from turanlab.enumeration import enumerate_free_graphs
from turanlab.errors import InvalidArgument, IoFailure, NoValidM, TuranLabError
from turanlab.extremal import generalized_turan, generalized_turan_from_stream, is_degenerate_pair
from turanlab.graph import blow_up, turan_graph
from turanlab.graph6 import graph_from_graph6, graph_to_graph6
from turanlab.stability import stability_profile, turan_edit_distance
from turanlab.supersaturation import heavy_subset_census, supersaturation_check
from turanlab.symmetrization import symmetrize

logger = logging.getLogger(__name__)


class _UsageError(Exception):
    def __init__(self, code):
        super().__init__(code)
        self.code = code


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage errors instead of exiting the process"""

    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        raise _UsageError(status)


def parse_rational(text: str) -> Fraction:
    """p/q or an integer; decimals are refused so identities stay exact"""
    if "." in text or "e" in text.lower():
        raise argparse.ArgumentTypeError(f"expected p/q, got {text!r}")
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected p/q, got {text!r}") from exc
    return value


def read_graph(source: str):
    """Inline graph6, @path (first non-blank line) or - for standard input"""
    if source == "-":
        text = sys.stdin.readline()
    elif source.startswith("@"):
        try:
            with open(source[1:], "r", encoding="ascii") as handle:
                text = next((line for line in handle if line.strip()), "")
        except OSError as exc:
            raise IoFailure(f"cannot read graph file {source[1:]}: {exc}") from exc
    else:
        text = source
    return graph_from_graph6(text)


def _open_catalog(args, required: bool):
    if args.catalog or os.environ.get(CATALOG_ENV) or required:
        return Catalog(args.catalog)
    return None


def cmd_count(args):
    return {"count": count_copies(read_graph(args.pattern), read_graph(args.host), threads=args.threads)}


def cmd_cliques(args):
    return {"count": count_cliques(args.r, read_graph(args.host))}


def cmd_chromatic(args):
    return {"chromatic_number": chromatic_number(read_graph(args.graph))}


def cmd_hom(args):
    return {"exists": exists_homomorphism(read_graph(args.source), read_graph(args.target))}


def cmd_turan_graph(args):
    return {"graph6": graph_to_graph6(turan_graph(args.n, args.parts))}


def cmd_blowup(args):
    return {"graph6": graph_to_graph6(blow_up(read_graph(args.graph), args.t))}


def cmd_enumerate(args):
    graphs = (graph_to_graph6(g) for g in enumerate_free_graphs(args.n, read_graph(args.forbid), args.threads))
    if args.raw:
        return graphs
    graphs = list(graphs)
    return {"n": args.n, "count": len(graphs), "graphs": graphs}


def cmd_extremal(args):
    h, f = read_graph(args.pattern), read_graph(args.forbid)
    if args.stream:
        if args.stream == "-":
            return generalized_turan_from_stream(sys.stdin, args.n, h, f).to_dict()
        try:
            with open(args.stream, "r", encoding="ascii") as handle:
                return generalized_turan_from_stream(handle, args.n, h, f).to_dict()
        except OSError as exc:
            raise IoFailure(f"cannot read stream {args.stream}: {exc}") from exc
    catalog = _open_catalog(args, required=False)
    if catalog is not None:
        return lookup_or_compute(catalog, args.n, h, f, threads=args.threads).to_dict()
    return generalized_turan(args.n, h, f, threads=args.threads).to_dict()


def cmd_degenerate(args):
    return {"degenerate": is_degenerate_pair(read_graph(args.pattern), read_graph(args.forbid))}


def cmd_density(args):
    catalog = _open_catalog(args, required=True)
    bracket = density_bracket(read_graph(args.pattern), read_graph(args.forbid), args.max_n,
                              catalog=catalog, threads=args.threads)
    return bracket.to_dict()


def cmd_monotone(args):
    h, f = read_graph(args.pattern), read_graph(args.forbid)
    table = _open_catalog(args, required=True).table(h, f)
    violations = check_ratio_monotone(table, h.n)
    return {
        "table": [list(row) for row in table],
        "violations": [v.to_dict(h.n) for v in violations],
    }


def cmd_census(args):
    result = heavy_subset_census(read_graph(args.host), read_graph(args.pattern), args.m, args.threshold,
                                 threads=args.threads)
    return result.to_dict()


def cmd_supersat(args):
    g, h, f = read_graph(args.host), read_graph(args.pattern), read_graph(args.forbid)
    catalog = _open_catalog(args, required=True)
    table = catalog.table(h, f)
    max_n = args.max_n if args.max_n is not None else (table[-1][0] if table else None)
    if max_n is None:
        raise NoValidM("catalog holds no exhaustive values for this pair")
    bracket = density_bracket(h, f, max_n, catalog=catalog, threads=args.threads)
    report = supersaturation_check(g, h, f, args.c, bracket, catalog=catalog, threads=args.threads)
    payload = report.to_dict()
    payload["bracket"] = bracket.to_dict()
    return payload


def cmd_symmetrize(args):
    return symmetrize(read_graph(args.graph), args.r).to_dict()


def cmd_delete_greedy(args):
    trace = greedy_min_copy_deletion(read_graph(args.graph), args.r, args.k, args.alpha, q=args.q, beta=args.beta)
    return trace.to_dict()


def cmd_degree_check(args):
    return check_degree_lemma(read_graph(args.graph), args.x, args.k, args.r, args.alpha).to_dict()


def cmd_distance(args):
    return turan_edit_distance(read_graph(args.graph), args.parts, threads=args.threads).to_dict()


def cmd_stability(args):
    if not args.floors:
        raise InvalidArgument("give at least one edge floor")
    rows = stability_profile(args.n, args.k, args.floors, parts=args.parts, threads=args.threads)
    return {"n": args.n, "k": args.k, "rows": [row.to_dict() for row in rows]}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="turanlab", description="Exact workbench for generalized Turan problems")
    parser.add_argument("--version", action="version", version=f"turanlab {__version__}")
    parser.add_argument("--threads", type=int, help="worker processes for shardable sweeps (default TURANLAB_THREADS or 1)")
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = command("count", cmd_count, "N(H, G)")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", default="-")

    p = command("cliques", cmd_cliques, "N(K_r, G)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--host", default="-")

    p = command("chromatic", cmd_chromatic, "chromatic number")
    p.add_argument("--graph", default="-")

    p = command("hom", cmd_hom, "does a homomorphism exist")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)

    p = command("turan-graph", cmd_turan_graph, "graph6 of T_parts(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--parts", type=int, required=True)

    p = command("blowup", cmd_blowup, "graph6 of G[t]")
    p.add_argument("--graph", default="-")
    p.add_argument("--t", type=int, required=True)

    p = command("enumerate", cmd_enumerate, "F-free graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", required=True)
    p.add_argument("--raw", action="store_true", help="bare graph6 lines instead of JSON")

    p = command("extremal", cmd_extremal, "ex(n, H, F) with witnesses")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--forbid", required=True)
    p.add_argument("--stream", help="graph6 file (or -) to maximize over instead of enumerating")
    p.add_argument("--catalog")

    p = command("degenerate", cmd_degenerate, "is (H, F) a degenerate pair")
    p.add_argument("--pattern", required=True)
    p.add_argument("--forbid", required=True)

    p = command("density", cmd_density, "bracket on the Turan density")
    p.add_argument("--pattern", required=True)
    p.add_argument("--forbid", required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--catalog")

    p = command("monotone", cmd_monotone, "ratio monotonicity over a catalog table")
    p.add_argument("--pattern", required=True)
    p.add_argument("--forbid", required=True)
    p.add_argument("--catalog")

    p = command("census", cmd_census, "heavy m-set census")
    p.add_argument("--host", default="-")
    p.add_argument("--pattern", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--threshold", type=parse_rational, required=True)

    p = command("supersat", cmd_supersat, "supersaturation report")
    p.add_argument("--host", default="-")
    p.add_argument("--pattern", required=True)
    p.add_argument("--forbid", required=True)
    p.add_argument("--c", type=parse_rational, required=True)
    p.add_argument("--max-n", type=int, help="n of the upper density bound (default: largest catalogued)")
    p.add_argument("--catalog")

    p = command("symmetrize", cmd_symmetrize, "Zykov symmetrization trace")
    p.add_argument("--graph", default="-")
    p.add_argument("--r", type=int, required=True)

    p = command("delete-greedy", cmd_delete_greedy, "greedy min-copy deletion trace")
    p.add_argument("--graph", default="-")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=parse_rational, required=True)
    p.add_argument("--q", type=parse_rational)
    p.add_argument("--beta", type=parse_rational)

    p = command("degree-check", cmd_degree_check, "degree bound at one vertex")
    p.add_argument("--graph", default="-")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--alpha", type=parse_rational, required=True)

    p = command("distance", cmd_distance, "edit distance to the Turan graph")
    p.add_argument("--graph", default="-")
    p.add_argument("--parts", type=int, required=True)

    p = command("stability", cmd_stability, "max edit distance above edge floors")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--parts", type=int)
    p.add_argument("--floors", type=int, nargs="+", required=True)

    return parser


def _emit_error(exc: TuranLabError):
    record = {"status": "error"}
    record.update(exc.to_dict())
    sys.stderr.write(json.dumps(record) + "\n")


def run(argv=None) -> int:
    """
    Run one subcommand

    Args:
        argv (list): Arguments without the program name

    Returns:
        int: 0 on success, 1 on a domain error, 2 on a usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return exc.code

    logging.basicConfig(
        level=logging.INFO if args.verbose else LOG_LEVEL,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        args.threads = resolve_threads(args.threads)
    except InvalidArgument as exc:
        _emit_error(exc)
        return 2
    if args.threads < 1:
        _emit_error(InvalidArgument(f"worker count must be positive, got {args.threads}"))
        return 2

    started = time.perf_counter()
    try:
        payload = args.func(args)
    except TuranLabError as exc:
        logger.debug(f"{args.command} failed: {exc}")
        _emit_error(exc)
        return 1
    elapsed_ms = int((time.perf_counter() - started) * 1000)

    if args.command == "enumerate" and args.raw:
        # lines go out as the enumeration yields them
        try:
            for line in payload:
                sys.stdout.write(line + "\n")
                sys.stdout.flush()
        except TuranLabError as exc:
            _emit_error(exc)
            return 1
        return 0
    sys.stdout.write(json.dumps({"status": "ok", "payload": payload, "elapsed_ms": elapsed_ms}) + "\n")
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
