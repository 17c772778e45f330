"""Intervals B(H, A) of the free crossing-model crystal as coloured digraphs.

Vertex ids are assigned in BFS order from the zero configuration, exploring
the red operator before the green one, so generated graphs (and everything
serialised from them) are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .crossing import (
    FORWARD,
    ZERO,
    Bounds,
    Configuration,
    EqualityPattern,
    PATTERN_EQUALITIES,
    is_admissible,
    is_fat,
)
from .errors import AxiomViolationError, ConsistencyError
from .graph import GREEN, OPERATOR_COLOR, RED, ColoredGraph, Edge, glue


class CrystalGraph(ColoredGraph):
    """A :class:`ColoredGraph` whose vertices ``0..n-1`` carry configurations."""

    def __init__(self, configs: list[Configuration], edges: list[Edge], bounds: Bounds):
        self.configs = list(configs)
        self.bounds = bounds
        self.index = {f: i for i, f in enumerate(self.configs)}
        super().__init__(
            list(range(len(self.configs))),
            edges,
            {i: {"config": f} for i, f in enumerate(self.configs)},
        )

    @property
    def h(self) -> int:
        return self.bounds.h_cap

    @property
    def a(self) -> int:
        return self.bounds.a_cap

    @property
    def red_edges(self) -> set[tuple[int, int]]:
        return {(e.src, e.dst) for e in self.edges_of(RED)}

    @property
    def green_edges(self) -> set[tuple[int, int]]:
        return {(e.src, e.dst) for e in self.edges_of(GREEN)}

    @cached_property
    def stats(self) -> dict[int, dict]:
        """colour -> {vertex: (t, h)}, computed once per graph."""
        return {1: self.string_stats(RED), 2: self.string_stats(GREEN)}

    @property
    def source(self) -> int:
        (v,) = self.sources()
        return v

    @property
    def sink(self) -> int:
        (v,) = self.sinks()
        return v

    def label(self, src: int, color: str) -> int | None:
        e = self.out_edge(src, color)
        return None if e is None else e.label


def generate(bounds: Bounds) -> CrystalGraph:
    """BFS closure of the zero configuration under the bounded operators."""
    if bounds.is_free:
        raise ValueError("generate needs interval bounds")
    configs = [ZERO]
    index = {ZERO: 0}
    edges = []
    queue = deque([ZERO])
    while queue:
        f = queue.popleft()
        for i in (1, 2):
            g = FORWARD[i](f, bounds)
            if g is None:
                continue
            if g not in index:
                index[g] = len(configs)
                configs.append(g)
                queue.append(g)
            edges.append(Edge(index[f], index[g], OPERATOR_COLOR[i]))
    return CrystalGraph(configs, edges, bounds)


def interval(h: int, a: int, decorated: bool = True) -> CrystalGraph:
    """Shorthand for ``decorate(generate(Bounds.interval(h, a)))``."""
    g = generate(Bounds.interval(h, a))
    return decorate(g) if decorated else g


def _tied_chains(length: int, ties: set[int], lo: int, hi: int):
    """Non-increasing integer chains in [lo, hi]; position i == i+1 for i in ties."""

    def rec(prefix):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        i = len(prefix)
        if i and (i - 1) in ties:
            yield from rec(prefix + [prefix[-1]])
            return
        top = prefix[-1] if prefix else hi
        for v in range(lo, top + 1):
            yield from rec(prefix + [v])

    yield from rec([])


_TOP = {"ab": 0, "bc": 1}
_BOTTOM = {"xy": 0, "yz": 1, "zw": 2}


def enumerate_interval(bounds: Bounds) -> set[Configuration]:
    """Admissible configurations of the interval, found without operators.

    Each equality pattern cuts out a polyhedron; we list its integer points
    inside the box ``0 <= c, a <= A, 0 <= w, x <= H`` and keep the ones with
    the right parities.
    """
    found = set()
    for pattern in EqualityPattern:
        need = PATTERN_EQUALITIES[pattern]
        top_ties = {_TOP[e] for e in need if e in _TOP}
        bottom_ties = {_BOTTOM[e] for e in need if e in _BOTTOM}
        for top in _tied_chains(3, top_ties, 0, bounds.a_cap):
            if top[0] % 2 or top[2] % 2:
                continue
            for bottom in _tied_chains(4, bottom_ties, 0, bounds.h_cap):
                if (bottom[1] + bottom[2]) % 2:
                    continue
                found.add(Configuration(*top, *bottom))
    return found


def enumerate_box(bounds: Bounds) -> set[Configuration]:
    """Brute force over the whole bounding box, filtered by admissibility."""
    A, H = bounds.a_cap, bounds.h_cap
    found = set()
    for top in product(range(A + 1), repeat=3):
        for bottom in product(range(H + 1), repeat=4):
            f = Configuration(*top, *bottom)
            if is_admissible(f):
                found.add(f)
    return found


def string_stats(g: ColoredGraph, v, color: int) -> tuple[int, int]:
    """``(t_i(v), h_i(v))`` for operator colour ``i`` in {1, 2}."""
    if v not in g:
        raise KeyError(f"vertex {v!r} not in graph")
    col = OPERATOR_COLOR[color]
    t = 0
    e = g.in_edge(v, col)
    while e is not None:
        t += 1
        e = g.in_edge(e.src, col)
    h = 0
    e = g.out_edge(v, col)
    while e is not None:
        h += 1
        e = g.out_edge(e.dst, col)
    return t, h


def edge_labels(g: ColoredGraph) -> dict[Edge, int]:
    """Half-unit labels recomputed from string statistics (needs K0)."""
    st1 = g.string_stats(RED)
    st2 = g.string_stats(GREEN)
    labels = {}
    for e in g.edges:
        if e.color == RED:
            labels[e] = 2 * (st2[e.dst][1] - st2[e.src][1])
        elif e.color == GREEN:
            labels[e] = st1[e.dst][1] - st1[e.src][1]
    return labels


def _labeled_edges(g: ColoredGraph) -> list[Edge]:
    labels = edge_labels(g)
    edges = []
    for e in g.edges:
        lab = labels[e]
        allowed = (0, 2) if e.color == RED else (0, 1, 2)
        if lab not in allowed:
            axiom = "K2" if lab < 0 else "K1"
            raise AxiomViolationError(axiom, f"edge {e.src}->{e.dst} gets label {lab}/2")
        edges.append(e.relabeled(lab))
    return edges


def decorate_colored(g: ColoredGraph) -> ColoredGraph:
    """Label every edge of an arbitrary graph from its string statistics."""
    return g.with_edges(_labeled_edges(g))


def decorate(g: CrystalGraph) -> CrystalGraph:
    """Copy of ``g`` with every edge labelled in half-units."""
    return CrystalGraph(g.configs, _labeled_edges(g), g.bounds)


@dataclass(frozen=True)
class Weight:
    w1: int
    w2: int


def weight_of(g: ColoredGraph, v) -> Weight:
    t1, h1 = string_stats(g, v, 1)
    t2, h2 = string_stats(g, v, 2)
    return Weight(h1 - t1, h2 - t2)


def fat_vertices(g: CrystalGraph) -> list[int]:
    return [i for i, f in enumerate(g.configs) if is_fat(f)]


def red_string_of(g: ColoredGraph, v) -> list:
    """The red string through ``v`` from its first vertex."""
    while (e := g.in_edge(v, RED)) is not None:
        v = e.src
    path = [v]
    while (e := g.out_edge(path[-1], RED)) is not None:
        path.append(e.dst)
    return path


def critical_of_red_string(g: ColoredGraph, string: list) -> tuple[object, int, int]:
    """The vertex where red labels switch from 0 to 1, with its (t1, h1)."""
    labels = []
    for u, v in zip(string, string[1:]):
        e = g.out_edge(u, RED)
        if e is None or e.dst != v:
            raise ValueError(f"{u!r} -> {v!r} is not a red edge")
        if e.label is None:
            raise ValueError("red string is not labelled")
        labels.append(e.label)
    if labels != sorted(labels):
        raise AxiomViolationError("K3", f"red labels {labels} on string starting at {string[0]!r}")
    pos = sum(1 for lab in labels if lab == 0)
    return string[pos], pos, len(labels) - pos


@dataclass
class ProductEmbedding:
    h: int
    a: int
    mapping: dict  # glued-vertex key -> vertex id of B(H, A)
    glued_size: int
    target_size: int


def embed_product(h: int, a: int) -> ProductEmbedding:
    """Embed ``B(H,0) ⊛ B(0,A)`` (fat vertices distinguished) into ``B(H,A)``.

    Raises :class:`ConsistencyError` if any vertex or edge fails to land.
    """
    left = generate(Bounds.interval(h, 0))
    right = generate(Bounds.interval(0, a))
    target = generate(Bounds.interval(h, a))
    s_set = fat_vertices(left)
    t_set = fat_vertices(right)
    glued, origin = glue(left, s_set, right, t_set)

    def image(side, copy, v):
        if side == "L":
            alpha = right.configs[copy].a
            return left.configs[v]._replace(a=alpha, b=alpha, c=alpha)
        level = left.configs[copy].x
        return right.configs[v]._replace(x=level, y=level, z=level, w=level)

    mapping = {}
    for key, sources in origin.items():
        images = {image(*src) for src in sources}
        if len(images) != 1:
            raise ConsistencyError(f"identified vertex {key} has images {images}")
        (f,) = images
        if f not in target.index:
            raise ConsistencyError(f"{f} is not a vertex of B({h},{a})")
        mapping[key] = target.index[f]
    if len(set(mapping.values())) != len(mapping):
        raise ConsistencyError("embedding is not injective")
    target_edges = {(e.src, e.dst, e.color) for e in target.edges}
    for e in glued.edges:
        if (mapping[e.src], mapping[e.dst], e.color) not in target_edges:
            raise ConsistencyError(f"edge {e} does not map to an edge")
    return ProductEmbedding(h, a, mapping, len(glued), len(target))


def weyl_dimension(h: int, a: int) -> int:
    """Dimension of the sp(4) irrep with highest weight h*l1 + (a/2)*l2."""
    b = a // 2
    return (h + 1) * (b + 1) * (h + b + 2) * (h + 2 * b + 3) // 6
