"""Local implication patterns and an embedding matcher for them.

A pattern is a small labelled graph (the premise) together with a larger
one containing it (the conclusion).  A graph satisfies the pattern when
every embedding of the premise extends to an embedding of the conclusion.

Vertex names follow the figures loosely; edges are written
``(src, dst, colour, label)`` with labels in display units.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import GREEN, RED, ColoredGraph


@dataclass(frozen=True)
class PatternEdge:
    src: str
    dst: str
    color: str
    label: int | None  # half-units; None matches any label


@dataclass(frozen=True)
class Pattern:
    id: str
    premise: tuple[PatternEdge, ...]
    conclusion: tuple[PatternEdge, ...]  # includes the premise edges
    dual_of: str | None = None
    description: str = ""

    @property
    def premise_vertices(self) -> list[str]:
        return _vertices(self.premise)

    @property
    def extension(self) -> tuple[PatternEdge, ...]:
        prem = set(self.premise)
        return tuple(e for e in self.conclusion if e not in prem)


def _vertices(edges) -> list[str]:
    seen: dict[str, None] = {}
    for e in edges:
        seen.setdefault(e.src)
        seen.setdefault(e.dst)
    return list(seen)


_HALVES = {"0": 0, "1/2": 1, "h": 1, "1": 2}
_COLOR = {"r": RED, "g": GREEN}


def _edges(spec: str) -> tuple[PatternEdge, ...]:
    """Parse ``"P g1 Q; Q r0 R"``: colour letter then display label (h = 1/2)."""
    out = []
    for item in spec.split(";"):
        item = item.strip()
        if not item:
            continue
        src, tag, dst = item.split()
        out.append(PatternEdge(src, dst, _COLOR[tag[0]], _HALVES[tag[1:]]))
    return tuple(out)


def make_pattern(pid: str, premise: str, extension: str, description: str = "") -> Pattern:
    prem = _edges(premise)
    return Pattern(pid, prem, prem + _edges(extension), pid + "*", description)


def dualize_edges(edges) -> tuple[PatternEdge, ...]:
    return tuple(
        PatternEdge(e.dst, e.src, e.color, None if e.label is None else 2 - e.label)
        for e in edges
    )


def dualize_pattern(p: Pattern) -> Pattern:
    """Reverse every edge and replace each label a by 1 - a."""
    if p.id.endswith("*"):
        pid = p.id[:-1]
    else:
        pid = p.id + "*"
    return Pattern(
        pid,
        dualize_edges(p.premise),
        dualize_edges(p.conclusion),
        p.id,
        p.description,
    )


# Premises carry a green edge labelled 1 that is not the bottom of a K4
# square; conclusions are the degree 4 and degree 7 relations.
DEGREE4_A = make_pattern(
    "deg4a",
    "P g1 Q; P r1 R; R g0 S1",
    "Q r0 S2; S2 r1 U; U g0 W; S1 g1 T; T r0 W",
    "degree 4: F1 F2 F2 F1 = F2 F1 F1 F2",
)
DEGREE4_B = make_pattern(
    "deg4b",
    "P g1 Q; Q r0 R; X gh R",
    "Z r1 Y; Y g0 P; Z gh M; M r0 O; O r1 X",
    "degree 4, closed below",
)
DEGREE4_C = make_pattern(
    "deg4c",
    "P g1 Q; Q r0 R; R r0 S; P r1 T; T gh U",
    "V r1 W; W gh R; W r1 X; X g0 Y; U r0 Y",
    "degree 4 relation walked twice against the orientation",
)
DEGREE7 = make_pattern(
    "deg7",
    "A g1 a1; a1 r0 a2; a2 r1 a3; A r1 t; t gh u",
    "a3 g0 D; D r1 d1; d1 gh d2; d2 r0 C; u r0 B; B g1 b1; b1 r0 b2; b2 r1 b3; b3 g0 C",
    "degree 7 Verma relation",
)

# Consequences of the axioms, checked as warnings.
DEGREE5 = make_pattern(
    "deg5",
    "P g1 Q; Q r0 R; R r0 S; P r1 T; T gh U",
    "S r1 S2; S2 gh W; U r0 U2; U2 g1 V; V r0 W",
    "degree 5 relation",
)
DEGREE5_DUAL = make_pattern(
    "deg5-dual",
    "R0 r1 R1; R1 r1 R2; R2 g0 C; X gh Y; Y r0 C",
    "N gh M1; M1 r0 R0; N r1 K; K g0 L; L r1 X",
    "dual degree 5 relation",
)
DEGREE7_LOWER = make_pattern(
    "deg7-lower",
    "A r1 t; t gh u; u r0 B; B g1 b1; b1 r0 b2; b2 r1 b3",
    "A g1 a1; a1 r0 a2; a2 r1 a3; a3 g0 D; D r1 d1; d1 gh d2; d2 r0 C; b3 g0 C",
    "a lower route of the degree 7 relation forces the whole relation",
)

BASE_PATTERNS = (DEGREE4_A, DEGREE4_B, DEGREE4_C, DEGREE7)


def _with_duals(patterns) -> tuple[Pattern, ...]:
    out = []
    for p in patterns:
        out.append(p)
        out.append(dualize_pattern(p))
    return tuple(out)


K5_CATALOG = _with_duals(BASE_PATTERNS)
WARNING_CATALOG = _with_duals((DEGREE5, DEGREE7_LOWER))

# K4 squares, as patterns: first vertex of the premise is v / q.
K4_SQUARE = make_pattern("K4", "u r0 v; v g1 w", "u g1 u2; u2 r0 w")
K4_SQUARE_DUAL = dualize_pattern(K4_SQUARE)


def _ordered(edges, seeds: set[str]) -> list[PatternEdge]:
    """Order edges so each one touches a vertex fixed by an earlier edge."""
    known = set(seeds)
    todo = list(edges)
    order = []
    while todo:
        for i, e in enumerate(todo):
            if e.src in known or e.dst in known:
                order.append(e)
                known.update((e.src, e.dst))
                del todo[i]
                break
        else:
            raise ValueError("pattern is not connected")
    return order


def _extend(g: ColoredGraph, order, mapping: dict, used: set):
    """All injective extensions of ``mapping`` that realise every edge in ``order``."""
    if not order:
        yield dict(mapping)
        return
    e, rest = order[0], order[1:]
    s, d = mapping.get(e.src), mapping.get(e.dst)
    if s is not None and d is not None:
        if any(x.dst == d and (e.label is None or x.label == e.label)
               for x in g.out_edges(s, e.color)):
            yield from _extend(g, rest, mapping, used)
        return
    if s is not None:
        cands = [(e.dst, x.dst) for x in g.out_edges(s, e.color)
                 if e.label is None or x.label == e.label]
    else:
        cands = [(e.src, x.src) for x in g.in_edges(d, e.color)
                 if e.label is None or x.label == e.label]
    for name, image in cands:
        if image in used:
            continue
        mapping[name] = image
        used.add(image)
        yield from _extend(g, rest, mapping, used)
        del mapping[name]
        used.discard(image)


def embeddings(g: ColoredGraph, edges) -> list[dict]:
    """Label- and colour-preserving injective embeddings of ``edges`` into ``g``."""
    if not edges:
        return []
    # seed from the pattern edge with the fewest candidate images
    seed = min(edges, key=lambda e: len(g.edges_keyed(e.color, e.label)))
    order = _ordered([e for e in edges if e is not seed], {seed.src, seed.dst})
    found = []
    for x in g.edges_keyed(seed.color, seed.label):
        if x.src != x.dst:
            found.extend(_extend(g, order, {seed.src: x.src, seed.dst: x.dst}, {x.src, x.dst}))
    return found


@dataclass
class Match:
    pattern: str
    mapping: dict
    extended: bool
    extension: dict | None = field(default=None)


def match_pattern(g: ColoredGraph, p: Pattern) -> list[Match]:
    """Every premise embedding, each with whether the conclusion extends it."""
    ext_order = None
    if p.extension:
        ext_order = _ordered(p.extension, set(p.premise_vertices))
    results = []
    for m in embeddings(g, p.premise):
        if ext_order is None:
            results.append(Match(p.id, m, True, m))
            continue
        full = next(_extend(g, ext_order, dict(m), set(m.values())), None)
        results.append(Match(p.id, m, full is not None, full))
    return results


def display_label(halves: int | None) -> str:
    return "*" if halves is None else str(Fraction(halves, 2))
