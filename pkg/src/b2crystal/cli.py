"""Command-line interface.

Exit codes: 0 pass, 1 verified violation, 2 usage or I/O error.
Set ``B2CRYSTAL_LOG`` (e.g. ``DEBUG``) for log output on stderr.
"""

from __future__ import annotations

import argparse
import functools
import json
import logging
import os
import sys

from . import __version__
from .axioms import AXIOMS, AxiomReport, check_all
from .coords import canonical_coords, check_vertex
from .crossing import Bounds
from .crystal import CrystalGraph, decorate_colored, fat_vertices, interval, weight_of, weyl_dimension
from .documents import DocumentError, document_to_graph, dumps, export_dot, graph_to_document, read_document, write_atomic
from .errors import AxiomViolationError, CrystalError, PreconditionError, StructureError
from .sky import check_lemma1, contract, iso, sky_model

log = logging.getLogger("b2crystal")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _bounds(args) -> Bounds:
    if args.H is None or args.A is None:
        raise UsageError("--H and --A are required")
    try:
        return Bounds.interval(args.H, args.A)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _write(path, text: str) -> None:
    try:
        write_atomic(path, text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


def _load(path) -> dict:
    try:
        return read_document(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except DocumentError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _graph(doc: dict):
    try:
        return document_to_graph(doc)
    except (DocumentError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def verify_document(doc: dict, axioms=AXIOMS, derived: bool = False) -> tuple[int, dict]:
    """Exit code and ReportDocument for a parsed GraphDocument."""
    g = _graph(doc)
    report = check_all(g, axioms=axioms, derived=derived)
    out = report.to_dict()
    meta = doc["meta"]
    stats = {"vertex_count": len(g), "edge_count": len(g.edges)}
    if meta.get("kind") == "crystal" and "h" in meta and "a" in meta:
        stats["dimension_expected"] = weyl_dimension(meta["h"], meta["a"])
    out["stats"] = stats
    return (EXIT_OK if report.passed else EXIT_VIOLATION), out


def cmd_generate(args) -> int:
    g = interval(_bounds(args).h_cap, args.A)
    doc = graph_to_document(g)
    _write(args.out, dumps(doc))
    if args.dot:
        _write(args.dot, export_dot(doc))
    log.info("wrote %d vertices, %d edges", len(g), len(g.edges))
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = _load(args.input)
    axioms = AXIOMS if args.axiom.upper() == "ALL" else (args.axiom,)
    if args.axiom.upper() != "ALL" and args.axiom not in AXIOMS:
        raise UsageError(f"unknown axiom {args.axiom!r}")
    code, out = verify_document(doc, axioms, args.derived)
    _emit(out)
    return code


def sky_document(g, h: int | None, a: int | None, check: bool) -> tuple[int, dict | None, AxiomReport]:
    """Contract ``g``; with ``check``, also compare against the glued sails."""
    report = AxiomReport()
    if not g.labeled:
        try:
            g = decorate_colored(g)
        except (AxiomViolationError, PreconditionError) as exc:
            report.add("contract", [], f"cannot decorate: {exc}")
            return EXIT_VIOLATION, None, report
    try:
        s = contract(g)
    except (PreconditionError, StructureError) as exc:
        report.add("contract", [], str(exc))
        return EXIT_VIOLATION, None, report
    doc = graph_to_document(s, "sky")
    if check:
        if h is None or a is None:
            raise UsageError("--check needs H and A")
        report = report.merge(check_lemma1(s))
        result = iso(s, sky_model(h, a))
        if not result:
            report.add("sky-model", [], f"not isomorphic to the glued sails: {result.reason}")
        if s.expansion_count() != len(g):
            report.add("expansion", [], f"sum of X+Y+1 is {s.expansion_count()}, graph has {len(g)}")
    return (EXIT_OK if report.passed else EXIT_VIOLATION), doc, report


def cmd_sky(args) -> int:
    if args.input:
        doc = _load(args.input)
        if doc.get("meta", {}).get("kind") != "crystal":
            raise UsageError("sky needs a crystal document")
        g = _graph(doc)
        h, a = doc["meta"].get("h"), doc["meta"].get("a")
    else:
        b = _bounds(args)
        g, h, a = interval(b.h_cap, b.a_cap), b.h_cap, b.a_cap
    code, sky, report = sky_document(g, h, a, args.check)
    if sky is not None:
        if args.out:
            _write(args.out, dumps(sky))
        if args.dot:
            _write(args.dot, export_dot(sky))
    summary = report.to_dict()
    if sky is not None:
        summary["vertex_count"] = len(sky["vertices"])
        summary["labels"] = [v["xy"] for v in sky["vertices"]]
    _emit(summary)
    return code


def cmd_coords(args) -> int:
    b = _bounds(args)
    g = interval(b.h_cap, b.a_cap, decorated=False)
    if args.vertex is not None:
        if not 0 <= args.vertex < len(g):
            raise UsageError(f"unknown vertex id {args.vertex}")
        ids = [args.vertex]
    elif args.all:
        ids = list(g.vertices)
    else:
        ids = [g.source]
    code = EXIT_OK
    for v in ids:
        f = g.configs[v]
        row = {"id": v, "config": list(f), **canonical_coords(f, b).to_dict()}
        if args.check:
            fails = check_vertex(f, b).failures
            row["ok"] = not fails
            if fails:
                row["failures"] = fails
                code = EXIT_VIOLATION
        _emit(row)
    return code


def stats_of(g: CrystalGraph) -> dict:
    src, sink = weight_of(g, g.source), weight_of(g, g.sink)
    return {
        "vertices": len(g),
        "edges": len(g.edges),
        "fat": len(fat_vertices(g)),
        "source_weight": [src.w1, src.w2],
        "sink_weight": [sink.w1, sink.w2],
        "dimension_expected": weyl_dimension(g.h, g.a),
    }


def cmd_stats(args) -> int:
    b = _bounds(args)
    _emit(stats_of(interval(b.h_cap, b.a_cap, decorated=False)))
    return EXIT_OK


def cmd_iso(args) -> int:
    g1, g2 = _graph(_load(args.a)), _graph(_load(args.b))
    result = iso(g1, g2)
    _emit({"isomorphic": result.isomorphic, "reason": result.reason})
    return EXIT_OK if result else EXIT_VIOLATION


@functools.lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="b2crystal", description="Regular B2 crystals from the crossing model.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def interval_args(sp, required=True):
        sp.add_argument("--H", type=int, required=required)
        sp.add_argument("--A", type=int, required=required)

    sp = sub.add_parser("generate", help="write a decorated interval B(H,A)")
    interval_args(sp)
    sp.add_argument("--out", required=True)
    sp.add_argument("--dot")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("verify", help="check axioms on a graph document")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--axiom", default="ALL")
    sp.add_argument("--derived", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sky", help="contract red strings")
    sp.add_argument("--in", dest="input")
    interval_args(sp, required=False)
    sp.add_argument("--out")
    sp.add_argument("--dot")
    sp.add_argument("--check", action="store_true")
    sp.set_defaults(func=cmd_sky)

    sp = sub.add_parser("coords", help="canonical coordinates")
    interval_args(sp)
    which = sp.add_mutually_exclusive_group()
    which.add_argument("--all", action="store_true")
    which.add_argument("--vertex", type=int)
    sp.add_argument("--check", action="store_true")
    sp.set_defaults(func=cmd_coords)

    sp = sub.add_parser("stats", help="counts and weights")
    interval_args(sp)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("iso", help="compare two graph documents")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(func=cmd_iso)
    return p


def main(argv=None) -> int:
    level = os.environ.get("B2CRYSTAL_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "sky" and not args.input and (args.H is None or args.A is None):
            raise UsageError("sky needs --in or both --H and --A")
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"b2crystal: {exc}\n")
        return EXIT_USAGE
    except CrystalError as exc:
        sys.stderr.write(f"b2crystal: {exc}\n")
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
