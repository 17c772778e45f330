"""View from the sky: red strings contracted to (X, Y)-labelled vertices.

Sky edges are green or blue and carry half-unit labels.  Every sky graph
produced from an R-graph has, per vertex, pairwise distinct in-labels and
pairwise distinct out-labels, which is what makes :func:`iso` a plain
parallel traversal.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .axioms import AxiomReport
from .crystal import critical_of_red_string
from .errors import AxiomViolationError, GluingError, PreconditionError, StructureError
from .graph import BLUE, GREEN, RED, ColoredGraph, Edge
from .graph import glue as glue_graphs


class SkyGraph(ColoredGraph):
    """Coloured graph with an ``(X, Y)`` label on every vertex."""

    def __init__(self, vertices, edges, xy: dict, extra: dict | None = None):
        data = {v: {"xy": tuple(xy[v])} for v in vertices}
        for v, d in (extra or {}).items():
            data[v].update(d)
        super().__init__(vertices, edges, data)

    def xy(self, v) -> tuple[int, int]:
        return self.vertex_data[v]["xy"]

    def expansion_count(self) -> int:
        """Number of crystal vertices this sky graph stands for."""
        return sum(x + y + 1 for x, y in (self.xy(v) for v in self.vertices))

    def diagonal(self) -> list:
        return [v for v in self.vertices if self.vertex_data[v].get("diagonal") is not None]


def _sky_color(label: int, dx: int) -> str:
    if label == 1:
        return GREEN
    if abs(dx) == 1:
        return BLUE
    if abs(dx) in (0, 2):
        return GREEN
    raise StructureError(f"X jumps by {dx} along a label-{label}/2 edge")


def contract(g: ColoredGraph) -> SkyGraph:
    """Contract each red string of a decorated crystal to one vertex."""
    if not g.labeled:
        raise PreconditionError("contract needs a decorated graph")
    try:
        strings = g.strings(RED)
    except PreconditionError as exc:
        raise PreconditionError(f"K0 must hold first: {exc}") from exc
    owner = {}
    xy = {}
    for i, path in enumerate(strings):
        try:
            _, x, y = critical_of_red_string(g, path)
        except AxiomViolationError as exc:
            raise PreconditionError(f"K3 must hold first: {exc}") from exc
        xy[i] = (x, y)
        for v in path:
            owner[v] = i
    seen = set()
    edges = []
    for e in g.edges_of(GREEN):
        key = (owner[e.src], owner[e.dst], e.label)
        if key in seen:
            continue
        seen.add(key)
        dx = xy[key[1]][0] - xy[key[0]][0]
        edges.append(Edge(key[0], key[1], _sky_color(e.label, dx), e.label))
    return SkyGraph(list(range(len(strings))), edges, xy)


def check_lemma1(s: ColoredGraph) -> AxiomReport:
    """Degree, label-distinctness, parallel-edge and forbidden-shape checks."""
    rep = AxiomReport()
    pairs = Counter((e.src, e.dst) for e in s.edges)
    for (u, v), n in sorted(pairs.items(), key=repr):
        if n > 1:
            rep.add("sky-structure", [u, v], f"{n} parallel edges")
        if u == v:
            rep.add("sky-structure", [u], "loop")
    for v in s.vertices:
        for side, edges in (("in", s.in_edges(v)), ("out", s.out_edges(v))):
            if len(edges) > 3:
                rep.add("sky-structure", [v], f"{len(edges)} {side}going edges")
            labels = [e.label for e in edges]
            if len(set(labels)) != len(labels):
                rep.add("sky-structure", [v], f"{side}going labels repeat: {sorted(labels)}")
        ins, outs = s.in_edges(v), s.out_edges(v)
        half_in = [e for e in ins if e.color == GREEN and e.label == 1]
        half_out = [e for e in outs if e.color == GREEN and e.label == 1]
        blue0_out = [e for e in outs if e.color == BLUE and e.label == 0]
        blue1_in = [e for e in ins if e.color == BLUE and e.label == 2]
        if half_in and blue0_out:
            rep.add("half-then-blue0", [v], "1/2 edge followed by a blue 0-edge")
        if blue1_in and half_out:
            rep.add("blue1-then-half", [v], "blue 1-edge followed by a 1/2 edge")
        if half_out and blue0_out:
            rep.add("half-blue0-fork", [v], "1/2 edge and blue 0-edge leave the same vertex")
        if blue1_in and half_in:
            rep.add("blue1-half-join", [v], "blue 1-edge and 1/2 edge enter the same vertex")
    return rep


def sail_upper(h: int) -> SkyGraph:
    """The upper sail: etages k, positions l, labels (l, H - 2k - l); green only."""
    if h < 0:
        raise ValueError("H must be nonnegative")
    ids = {}
    for k in range(h // 2 + 1):
        for l in range(h - 2 * k + 1):
            ids[(k, l)] = len(ids)
    edges = []
    for (k, l), v in ids.items():
        if (k, l + 1) in ids:
            edges.append(Edge(v, ids[(k, l + 1)], GREEN, 1))
        if (k + 1, l) in ids:
            edges.append(Edge(v, ids[(k + 1, l)], GREEN, 0))
            edges.append(Edge(ids[(k + 1, l)], ids[(k, l + 2)], GREEN, 2))
    xy = {v: (l, h - 2 * k - l) for (k, l), v in ids.items()}
    extra = {v: {"pos": (k, l), "diagonal": l if k == 0 else None} for (k, l), v in ids.items()}
    return SkyGraph(list(ids.values()), edges, xy, extra)


def sail_lower(a: int) -> SkyGraph:
    """The lower sail: a triangular grid of blue edges, labels (k, k).

    ``a`` is the green-string length from the source, i.e. half the interval
    parameter A.
    """
    if a < 0:
        raise ValueError("A must be nonnegative")
    ids = {}
    for k in range(a + 1):
        for j in range(a - k + 1):
            ids[(k, j)] = len(ids)
    edges = []
    for (k, j), v in ids.items():
        if (k + 1, j) in ids:
            edges.append(Edge(v, ids[(k + 1, j)], BLUE, 2))
            edges.append(Edge(ids[(k + 1, j)], ids[(k, j + 1)], BLUE, 0))
    xy = {v: (k, k) for (k, j), v in ids.items()}
    extra = {v: {"pos": (k, j), "diagonal": j if k == 0 else None} for (k, j), v in ids.items()}
    return SkyGraph(list(ids.values()), edges, xy, extra)


@dataclass
class GlueSpec:
    left: ColoredGraph
    s_set: list
    right: ColoredGraph
    t_set: list


def _xy(g: ColoredGraph, v):
    d = g.vertex_data.get(v, {})
    return d.get("xy")


def glue(spec: GlueSpec) -> SkyGraph:
    """``(left, S) ⊛ (right, T)`` with vertex labels carried over.

    Left copies keep their labels; the right copy attached at ``s`` has its
    labels shifted by the label of ``s``.  Identified vertices must agree.
    """
    glued, origin = glue_graphs(spec.left, spec.s_set, spec.right, spec.t_set)
    renumber = {key: i for i, key in enumerate(origin)}
    xy = {}
    for key, sources in origin.items():
        values = set()
        for side, copy, v in sources:
            if side == "L":
                values.add(_xy(spec.left, v))
            else:
                base, shift = _xy(spec.right, v), _xy(spec.left, copy)
                values.add(None if base is None or shift is None
                           else (base[0] + shift[0], base[1] + shift[1]))
        if len(values) != 1:
            raise GluingError(f"vertex {key} gets labels {sorted(values, key=repr)}")
        (value,) = values
        xy[renumber[key]] = value if value is not None else (0, 0)
    edges = [Edge(renumber[e.src], renumber[e.dst], e.color, e.label) for e in glued.edges]
    return SkyGraph(list(range(len(origin))), edges, xy)


def sky_model(h: int, a: int) -> SkyGraph:
    """The glued sails for the interval B(H, A) (``a`` is the even interval cap)."""
    upper, lower = sail_upper(h), sail_lower(a // 2)
    s_set = sorted(upper.diagonal(), key=lambda v: upper.vertex_data[v]["diagonal"])
    t_set = sorted(lower.diagonal(), key=lambda v: lower.vertex_data[v]["diagonal"])
    return glue(GlueSpec(upper, s_set, lower, t_set))


@dataclass
class IsoResult:
    isomorphic: bool
    mapping: dict | None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.isomorphic


def _keyed(edges, end: str) -> dict | None:
    out = {}
    for e in edges:
        key = (e.color, e.label)
        if key in out:
            return None
        out[key] = getattr(e, end)
    return out


def iso(s1: ColoredGraph, s2: ColoredGraph) -> IsoResult:
    """Decide labelled isomorphism by walking both graphs from their sources.

    Edges at a vertex are told apart by (colour, label), so there is at most
    one candidate bijection; it is built and then checked in full, including
    vertex labels.
    """
    if len(s1) != len(s2) or len(s1.edges) != len(s2.edges):
        return IsoResult(False, None, "different sizes")
    if not len(s1):
        return IsoResult(True, {}, "")
    src1, src2 = s1.sources(), s2.sources()
    if len(src1) != 1 or len(src2) != 1:
        return IsoResult(False, None, f"need a unique source, found {len(src1)} and {len(src2)}")
    mapping = {src1[0]: src2[0]}
    queue = deque([src1[0]])
    while queue:
        u = queue.popleft()
        v = mapping[u]
        for edges1, edges2, end in (
            (s1.out_edges(u), s2.out_edges(v), "dst"),
            (s1.in_edges(u), s2.in_edges(v), "src"),
        ):
            k1, k2 = _keyed(edges1, end), _keyed(edges2, end)
            if k1 is None or k2 is None:
                return IsoResult(False, None, f"repeated (colour, label) at {u!r} or {v!r}")
            if k1.keys() != k2.keys():
                return IsoResult(False, mapping, f"edge labels differ at {u!r} -> {v!r}")
            for key, w1 in k1.items():
                w2 = k2[key]
                if w1 in mapping:
                    if mapping[w1] != w2:
                        return IsoResult(False, mapping, f"conflict at {w1!r}")
                    continue
                mapping[w1] = w2
                queue.append(w1)
    if len(mapping) != len(s1) or len(set(mapping.values())) != len(s2):
        return IsoResult(False, mapping, "traversal did not reach every vertex")
    for u, v in mapping.items():
        if _xy(s1, u) != _xy(s2, v):
            return IsoResult(False, mapping, f"vertex labels differ at {u!r} -> {v!r}")
    edges2 = {(e.src, e.dst, e.color, e.label) for e in s2.edges}
    for e in s1.edges:
        if (mapping[e.src], mapping[e.dst], e.color, e.label) not in edges2:
            return IsoResult(False, mapping, f"edge {e} has no image")
    return IsoResult(True, mapping, "")
