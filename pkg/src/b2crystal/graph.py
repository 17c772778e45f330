"""Edge-coloured digraphs with optional half-unit edge labels."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Iterator

from .errors import PreconditionError

RED = "red"
GREEN = "green"
BLUE = "blue"
COLORS = (RED, GREEN, BLUE)

# crystal operator index -> edge colour
OPERATOR_COLOR = {1: RED, 2: GREEN}


def label_text(halves: int | None) -> str:
    """Display form of a half-unit label: 0 -> "0", 1 -> "1/2", 2 -> "1"."""
    if halves is None:
        return ""
    value = Fraction(halves, 2)
    return str(value)


@dataclass(frozen=True)
class Edge:
    src: Hashable
    dst: Hashable
    color: str
    label: int | None = None  # in half-units

    def relabeled(self, label: int | None) -> "Edge":
        return Edge(self.src, self.dst, self.color, label)


@dataclass
class ColoredGraph:
    """A digraph whose edges carry a colour and possibly a label.

    No structural invariant is enforced here; that is the verifier's job.
    Adjacency is indexed per colour and kept as lists so that malformed
    inputs (two red out-edges, loops, ...) are representable.  Graphs are
    treated as immutable once built; string decompositions are cached.
    """

    vertices: list = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)
    vertex_data: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.vertices = list(self.vertices)
        self.edges = list(self.edges)
        self._vertex_set = set(self.vertices)
        if len(self._vertex_set) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        self._out: dict[str, dict] = {c: defaultdict(list) for c in COLORS}
        self._in: dict[str, dict] = {c: defaultdict(list) for c in COLORS}
        for e in self.edges:
            if e.src not in self._vertex_set or e.dst not in self._vertex_set:
                raise ValueError(f"edge {e} has an endpoint outside the vertex set")
            if e.color not in COLORS:
                raise ValueError(f"unknown colour {e.color!r}")
            self._out[e.color][e.src].append(e)
            self._in[e.color][e.dst].append(e)
        self._string_cache: dict[str, list] = {}
        self._stats_cache: dict[str, dict] = {}
        self._keyed: dict | None = None

    def __contains__(self, v) -> bool:
        return v in self._vertex_set

    def __len__(self) -> int:
        return len(self.vertices)

    def out_edges(self, v, color: str | None = None) -> list[Edge]:
        colors = COLORS if color is None else (color,)
        return [e for c in colors for e in self._out[c].get(v, ())]

    def in_edges(self, v, color: str | None = None) -> list[Edge]:
        colors = COLORS if color is None else (color,)
        return [e for c in colors for e in self._in[c].get(v, ())]

    def out_edge(self, v, color: str) -> Edge | None:
        """The unique out-edge of ``color`` (first one if K0 is broken)."""
        lst = self._out[color].get(v)
        return lst[0] if lst else None

    def in_edge(self, v, color: str) -> Edge | None:
        lst = self._in[color].get(v)
        return lst[0] if lst else None

    def edges_keyed(self, color: str, label: int | None = None) -> list[Edge]:
        """Edges of ``color`` carrying ``label``; every edge of ``color`` when ``label`` is None."""
        if self._keyed is None:
            self._keyed = defaultdict(list)
            for e in self.edges:
                self._keyed[e.color, None].append(e)
                if e.label is not None:
                    self._keyed[e.color, e.label].append(e)
        return self._keyed.get((color, label), [])

    def edges_of(self, color: str) -> Iterator[Edge]:
        return (e for e in self.edges if e.color == color)

    def colors_present(self) -> set[str]:
        return {e.color for e in self.edges}

    @property
    def labeled(self) -> bool:
        return all(e.label is not None for e in self.edges)

    def sources(self) -> list:
        return [v for v in self.vertices if not self.in_edges(v)]

    def sinks(self) -> list:
        return [v for v in self.vertices if not self.out_edges(v)]

    def with_edges(self, edges: Iterable[Edge]) -> "ColoredGraph":
        return ColoredGraph(self.vertices, list(edges), dict(self.vertex_data))

    def strings(self, color: str) -> list[list]:
        """Maximal monochromatic paths, each listed from its first vertex.

        Requires every vertex to have at most one in- and one out-edge of the
        colour and no monochromatic cycle.
        """
        if color not in self._string_cache:
            self._string_cache[color] = self._strings(color)
        return [list(p) for p in self._string_cache[color]]

    def _strings(self, color: str) -> list[list]:
        paths = []
        seen = set()
        for v in self.vertices:
            if len(self._in[color].get(v, ())) > 1 or len(self._out[color].get(v, ())) > 1:
                raise PreconditionError(f"vertex {v!r} branches in colour {color}")
            if self._in[color].get(v):
                continue
            path = [v]
            seen.add(v)
            e = self.out_edge(v, color)
            while e is not None:
                path.append(e.dst)
                seen.add(e.dst)
                e = self.out_edge(e.dst, color)
            paths.append(path)
        if len(seen) != len(self.vertices):
            raise PreconditionError(f"monochromatic cycle in colour {color}")
        return paths

    def string_stats(self, color: str) -> dict:
        """Map vertex -> (t, h): edges before and after it on its string."""
        if color not in self._stats_cache:
            stats = {}
            for path in self.strings(color):
                n = len(path) - 1
                for i, v in enumerate(path):
                    stats[v] = (i, n - i)
            self._stats_cache[color] = stats
        return dict(self._stats_cache[color])


def glue(left: ColoredGraph, s_set: list, right: ColoredGraph, t_set: list):
    """The product ``(left, S) ⊛ (right, T)``.

    One copy of ``left`` per ``t`` in ``T`` and one copy of ``right`` per
    ``s`` in ``S``; vertex ``s`` of copy ``left_t`` is identified with vertex
    ``t`` of copy ``right_s``.  Returns the glued graph and a map from every
    glued vertex key to the list of ``(side, copy, original vertex)`` it
    came from (two entries for identified vertices).  Vertex data is not
    carried over; callers decide how to label.
    """
    s_members, t_members = set(s_set), set(t_set)
    if not s_members <= set(left.vertices) or not t_members <= set(right.vertices):
        raise ValueError("distinguished sets must be vertex subsets")

    def lkey(t, v):
        return ("*", v, t) if v in s_members else ("L", t, v)

    def rkey(s, u):
        return ("*", s, u) if u in t_members else ("R", s, u)

    origin: dict = {}
    for t in t_set:
        for v in left.vertices:
            origin.setdefault(lkey(t, v), []).append(("L", t, v))
    for s in s_set:
        for u in right.vertices:
            origin.setdefault(rkey(s, u), []).append(("R", s, u))
    edges = [
        Edge(lkey(t, e.src), lkey(t, e.dst), e.color, e.label)
        for t in t_set for e in left.edges
    ]
    edges += [
        Edge(rkey(s, e.src), rkey(s, e.dst), e.color, e.label)
        for s in s_set for e in right.edges
    ]
    return ColoredGraph(list(origin), edges), origin
