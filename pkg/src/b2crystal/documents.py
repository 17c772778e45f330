"""JSON documents for graphs and reports, atomic file writes, DOT export."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .crossing import Bounds, Configuration
from .crystal import CrystalGraph
from .graph import BLUE, GREEN, RED, ColoredGraph, Edge, label_text
from .sky import SkyGraph

KIND_COLORS = {
    "crystal": {RED, GREEN},
    "sky": {GREEN, BLUE},
    "generic": {RED, GREEN, BLUE},
}


class DocumentError(ValueError):
    """A document that is not a well-formed GraphDocument."""


def _is_int(x) -> bool:
    return type(x) is int  # rejects bool


def _int_list(x, n: int) -> bool:
    return type(x) is list and len(x) == n and all(type(i) is int for i in x)


def _is_id(x) -> bool:
    return type(x) is int or type(x) is str


def validate_shape(doc) -> None:
    """Structural checks on a GraphDocument; raises DocumentError."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be an object")
    meta, vertices, edges = doc.get("meta"), doc.get("vertices"), doc.get("edges")
    if not isinstance(meta, dict) or meta.get("kind") not in KIND_COLORS:
        raise DocumentError(f"meta.kind must be one of {sorted(KIND_COLORS)}")
    for key in ("h", "a"):
        if key in meta and not _is_int(meta[key]):
            raise DocumentError(f"meta.{key} must be an integer")
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise DocumentError("vertices and edges must be arrays")
    for v in vertices:
        if not isinstance(v, dict) or not _is_id(v.get("id")):
            raise DocumentError(f"bad vertex {v!r}")
        if "config" in v and not _int_list(v["config"], 7):
            raise DocumentError(f"vertex {v['id']!r}: config must be 7 integers")
        if "xy" in v and not _int_list(v["xy"], 2):
            raise DocumentError(f"vertex {v['id']!r}: xy must be 2 integers")
    for e in edges:
        if not isinstance(e, dict) or not _is_id(e.get("src")) or not _is_id(e.get("dst")):
            raise DocumentError(f"bad edge {e!r}")
        if e.get("color") not in (RED, GREEN, BLUE):
            raise DocumentError(f"bad edge colour {e.get('color')!r}")
        lab = e.get("label_halves")
        if lab is not None and (not _is_int(lab) or lab not in (0, 1, 2)):
            raise DocumentError(f"label_halves must be 0, 1 or 2, got {lab!r}")


def graph_to_document(g: ColoredGraph, kind: str | None = None) -> dict:
    if kind is None:
        kind = "crystal" if isinstance(g, CrystalGraph) else "sky" if isinstance(g, SkyGraph) else "generic"
    meta: dict = {"kind": kind}
    if isinstance(g, CrystalGraph):
        meta["h"], meta["a"] = g.h, g.a
    vertices = []
    for v in g.vertices:
        item: dict = {"id": v}
        data = g.vertex_data.get(v, {})
        if "config" in data:
            item["config"] = list(data["config"])
        if "xy" in data:
            item["xy"] = list(data["xy"])
        vertices.append(item)
    edges = []
    for e in g.edges:
        item = {"src": e.src, "dst": e.dst, "color": e.color}
        if e.label is not None:
            item["label_halves"] = e.label
        edges.append(item)
    return {"meta": meta, "vertices": vertices, "edges": edges}


def document_to_graph(doc: dict) -> ColoredGraph:
    """Validate ``doc`` and rebuild the most specific graph type it describes."""
    validate_shape(doc)
    meta = doc["meta"]
    kind = meta["kind"]
    ids = [v["id"] for v in doc["vertices"]]
    if len(set(ids)) != len(ids):
        raise DocumentError("vertex ids are not unique")
    known = set(ids)
    edges = []
    for e in doc["edges"]:
        if e["src"] not in known or e["dst"] not in known:
            raise DocumentError(f"edge {e['src']}->{e['dst']} has an unknown endpoint")
        if e["color"] not in KIND_COLORS[kind]:
            raise DocumentError(f"colour {e['color']} is not allowed in a {kind} graph")
        edges.append(Edge(e["src"], e["dst"], e["color"], e.get("label_halves")))
    vs = doc["vertices"]
    if kind == "sky":
        if not all("xy" in v for v in vs):
            raise DocumentError("every sky vertex needs xy")
        return SkyGraph(ids, edges, {v["id"]: tuple(v["xy"]) for v in vs})
    configs = [Configuration.from_list(v["config"]) for v in vs if "config" in v]
    if (kind == "crystal" and len(configs) == len(vs) and ids == list(range(len(vs)))
            and "h" in meta and "a" in meta):
        try:
            bounds = Bounds.interval(meta["h"], meta["a"])
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
        return CrystalGraph(configs, edges, bounds)
    data = {}
    for v in vs:
        d = {}
        if "config" in v:
            d["config"] = Configuration.from_list(v["config"])
        if "xy" in v:
            d["xy"] = tuple(v["xy"])
        data[v["id"]] = d
    return ColoredGraph(ids, edges, data)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write through a temporary file in the target directory, then rename."""
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def read_document(path: str | os.PathLike) -> dict:
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not JSON: {exc}") from exc


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(doc: dict) -> str:
    """Graphviz text; vertices captioned with their config or (X, Y)."""
    lines = ["digraph G {", "  node [shape=box, fontsize=10];"]
    for v in doc["vertices"]:
        if "config" in v:
            c = v["config"]
            caption = "({},{},{}|{},{},{},{})".format(*c)
        elif "xy" in v:
            caption = "({},{})".format(*v["xy"])
        else:
            caption = str(v["id"])
        lines.append(f"  {_quote(str(v['id']))} [label={_quote(caption)}];")
    for e in doc["edges"]:
        attrs = [f"color={e['color']}"]
        if e.get("label_halves") is not None:
            attrs.append(f"label={_quote(label_text(e['label_halves']))}")
            attrs.append(f"fontcolor={e['color']}")
        lines.append(f"  {_quote(str(e['src']))} -> {_quote(str(e['dst']))} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
