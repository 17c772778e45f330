"""Checks of axioms K0-K5 and the local properties derived from them.

Every check is exhaustive: it reports all violations it finds rather than
stopping at the first.  Checks that need string statistics (K1 onwards)
raise :class:`PreconditionError` when K0 fails; checks that need labels
(K3 onwards) raise it when labels are missing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .crystal import critical_of_red_string, edge_labels
from .errors import AxiomViolationError, PreconditionError
from .graph import GREEN, RED, ColoredGraph, Edge
from .patterns import K5_CATALOG, WARNING_CATALOG, Pattern, match_pattern

AXIOMS = ("K0", "K1", "K2", "K3", "K4", "K5")
DERIVED = ("half-edge-corollary", "half-edge-context", "star-squares", "double-half")


def _loc(item):
    if isinstance(item, Edge):
        return [item.src, item.dst, item.color]
    return item


@dataclass(frozen=True)
class Violation:
    axiom: str
    location: tuple
    message: str

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "location": [_loc(x) for x in self.location],
                "message": self.message}


@dataclass
class AxiomReport:
    violations: list[Violation] = field(default_factory=list)
    diagnostics: list[Violation] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, axiom: str, location, message: str) -> None:
        self.violations.append(Violation(axiom, tuple(location), message))

    def note(self, axiom: str, location, message: str) -> None:
        self.diagnostics.append(Violation(axiom, tuple(location), message))

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        key = lambda v: (v.axiom, repr(v.location), v.message)  # noqa: E731
        return AxiomReport(
            sorted(self.violations + other.violations, key=key),
            sorted(self.diagnostics + other.diagnostics, key=key),
            self.skipped + other.skipped,
        )

    def axioms_violated(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def to_dict(self) -> dict:
        out = {"passed": self.passed,
               "violations": [v.to_dict() for v in self.violations]}
        if self.diagnostics:
            out["diagnostics"] = [v.to_dict() for v in self.diagnostics]
        if self.skipped:
            out["skipped"] = list(self.skipped)
        return out


def _check_k0(g: ColoredGraph) -> AxiomReport:
    rep = AxiomReport()
    for e in g.edges:
        if e.color not in (RED, GREEN):
            rep.add("K0", [e], f"edge colour {e.color!r} is not red or green")
    for color in (RED, GREEN):
        ok = True
        for v in g.vertices:
            outs, ins = g.out_edges(v, color), g.in_edges(v, color)
            if len(outs) > 1:
                rep.add("K0", [v], f"{len(outs)} outgoing {color} edges")
                ok = False
            if len(ins) > 1:
                rep.add("K0", [v], f"{len(ins)} incoming {color} edges")
                ok = False
        if not ok:
            continue
        reached = set()
        for v in g.vertices:
            if g.in_edge(v, color) is None:
                u = v
                reached.add(u)
                while (e := g.out_edge(u, color)) is not None:
                    u = e.dst
                    reached.add(u)
        for v in g.vertices:
            if v not in reached:
                rep.add("K0", [v], f"{color} edges through this vertex form a cycle")
                reached.add(v)
                u = v
                while (e := g.out_edge(u, color)) is not None and e.dst not in reached:
                    u = e.dst
                    reached.add(u)
    return rep


def _stats(g: ColoredGraph):
    try:
        return g.string_stats(RED), g.string_stats(GREEN)
    except PreconditionError as exc:
        raise PreconditionError(f"K0 must hold first: {exc}") from exc


def _check_k1_k2(g: ColoredGraph, which: str) -> AxiomReport:
    st1, st2 = _stats(g)
    rep = AxiomReport()
    for e in g.edges:
        other = st2 if e.color == RED else st1
        expected = 1 if e.color == RED else 2
        dt = other[e.src][0] - other[e.dst][0]
        dh = other[e.dst][1] - other[e.src][1]
        if which == "K1" and dt + dh != expected:
            rep.add("K1", [e], f"t-drop {dt} plus h-gain {dh} is not {expected}")
        if which == "K2":
            if dt < 0 or dh < 0:
                rep.add("K2", [e], f"t-drop {dt} and h-gain {dh} must be nonnegative")
    if which == "K2" and any(e.label is not None for e in g.edges):
        computed = edge_labels(g)
        for e in g.edges:
            if e.label is not None and e.label != computed[e]:
                rep.add("K2", [e], f"stored label {e.label}/2 but h-difference gives {computed[e]}/2")
    return rep


def _require_labels(g: ColoredGraph, axiom: str) -> None:
    if not g.labeled:
        raise PreconditionError(f"{axiom} needs every edge labelled")


def _check_k3(g: ColoredGraph) -> AxiomReport:
    _require_labels(g, "K3")
    rep = AxiomReport()
    for color in (RED, GREEN):
        for path in _strings(g, color):
            labels = [g.out_edge(u, color).label for u in path[:-1]]
            for i in range(len(labels) - 1):
                if labels[i] > labels[i + 1]:
                    rep.add("K3", [path[i], path[i + 1], path[i + 2]],
                            f"{color} labels drop from {labels[i]}/2 to {labels[i + 1]}/2")
    return rep


def _strings(g: ColoredGraph, color: str):
    try:
        return g.strings(color)
    except PreconditionError as exc:
        raise PreconditionError(f"K0 must hold first: {exc}") from exc


def _check_k4(g: ColoredGraph) -> AxiomReport:
    _require_labels(g, "K4")
    rep = AxiomReport()
    for v in g.vertices:
        r_in, g_out = g.in_edge(v, RED), g.out_edge(v, GREEN)
        if r_in is not None and g_out is not None:
            a, b = r_in.label, g_out.label
            if a == b:
                rep.add("K4", [r_in, g_out], f"red in-label equals green out-label ({a}/2)")
            elif a < b:
                if (a, b) != (0, 2):
                    rep.add("K4", [r_in, g_out], f"labels {a}/2 < {b}/2 but not (0, 1)")
                elif not _closes(g, r_in.src, GREEN, 2, RED, 0, g_out.dst):
                    rep.add("K4", [r_in, g_out], "missing commutative square below")
        g_in, r_out = g.in_edge(v, GREEN), g.out_edge(v, RED)
        if g_in is not None and r_out is not None:
            b, a = g_in.label, r_out.label
            if a == b:
                rep.add("K4", [g_in, r_out], f"green in-label equals red out-label ({a}/2)")
            elif a > b:
                if (a, b) != (2, 0):
                    rep.add("K4", [g_in, r_out], f"labels {a}/2 > {b}/2 but not (1, 0)")
                elif not _closes(g, g_in.src, RED, 2, GREEN, 0, r_out.dst):
                    rep.add("K4", [g_in, r_out], "missing commutative square above")
    return rep


def _closes(g, start, c1, l1, c2, l2, end) -> bool:
    e1 = g.out_edge(start, c1)
    if e1 is None or e1.label != l1:
        return False
    e2 = g.out_edge(e1.dst, c2)
    return e2 is not None and e2.label == l2 and e2.dst == end


def _check_patterns(g: ColoredGraph, catalog, axiom: str, warn: bool = False) -> AxiomReport:
    _require_labels(g, axiom)
    rep = AxiomReport()
    for p in catalog:
        for m in match_pattern(g, p):
            if not m.extended:
                loc = [m.mapping[name] for name in p.premise_vertices]
                msg = f"premise of pattern {p.id} matches but its conclusion does not embed"
                (rep.note if warn else rep.add)(axiom, loc, msg)
    return rep


def _green_one_diagnostics(g: ColoredGraph) -> AxiomReport:
    """Green 1-edges that are neither a K4 square bottom nor a K5 premise edge."""
    rep = AxiomReport()
    covered = set()
    for p in K5_CATALOG:
        ones = [e for e in p.premise if e.color == GREEN and e.label in (0, 2)]
        for m in match_pattern(g, p):
            for e in ones:
                covered.add((m.mapping[e.src], m.mapping[e.dst]))
    for e in g.edges_of(GREEN):
        if e.label != 2 or (e.src, e.dst) in covered:
            continue
        r1, r2 = g.out_edge(e.src, RED), g.out_edge(e.dst, RED)
        bottom = (r1 is not None and r2 is not None and r1.label == 0 and r2.label == 0
                  and _closes(g, e.src, RED, 0, GREEN, 2, r2.dst))
        if not bottom:
            rep.note("K5", [e], "green 1-edge outside every K4 square bottom and K5 premise")
    return rep


def check_axiom(g: ColoredGraph, axiom: str) -> AxiomReport:
    """Run one axiom check and return its violations."""
    if axiom == "K0":
        return _check_k0(g)
    if axiom in ("K1", "K2"):
        return _check_k1_k2(g, axiom)
    if axiom == "K3":
        return _check_k3(g)
    if axiom == "K4":
        return _check_k4(g)
    if axiom == "K5":
        return _check_patterns(g, K5_CATALOG, "K5")
    raise ValueError(f"unknown axiom {axiom!r}")


def check_warnings(g: ColoredGraph) -> AxiomReport:
    """Consequences that must hold in R-graphs, reported as diagnostics."""
    return _check_patterns(g, WARNING_CATALOG, "K5-consequence", warn=True)


def _red_criticals(g: ColoredGraph) -> dict:
    """vertex -> (t1 of vertex, X of its red string)."""
    out = {}
    for path in _strings(g, RED):
        try:
            _, x, _ = critical_of_red_string(g, path)
        except AxiomViolationError as exc:
            raise PreconditionError(f"K3 must hold first: {exc}") from exc
        for i, v in enumerate(path):
            out[v] = (i, x)
    return out


def check_derived(g: ColoredGraph, prop: str) -> AxiomReport:
    _require_labels(g, prop)
    rep = AxiomReport()
    if prop == "half-edge-corollary":
        for path in _strings(g, GREEN):
            halves = [u for u in path[:-1] if g.out_edge(u, GREEN).label == 1]
            if len(halves) > 1:
                rep.add(prop, halves, f"green string carries {len(halves)} edges labelled 1/2")
    elif prop == "half-edge-context":
        for e in g.edges_of(GREEN):
            if e.label != 1:
                continue
            r_in = g.in_edge(e.src, RED)
            r_out = g.out_edge(e.dst, RED)
            if r_in is None or r_in.label != 2:
                rep.add(prop, [e], "tail of a 1/2 edge lacks an incoming red 1-edge")
            if r_out is None or r_out.label != 0:
                rep.add(prop, [e], "head of a 1/2 edge lacks an outgoing red 0-edge")
    elif prop == "star-squares":
        crit = _red_criticals(g)
        for v in g.vertices:
            t, x = crit[v]
            if t >= x + 1 or t <= x - 2:
                r, gr = g.in_edge(v, RED), g.in_edge(v, GREEN)
                if r is not None and gr is not None:
                    below_r, below_g = g.in_edge(r.src, GREEN), g.in_edge(gr.src, RED)
                    if below_r is None or below_g is None or below_r.src != below_g.src:
                        rep.add(prop, [v], f"incoming pair does not close (t1={t}, X={x})")
            if t <= x - 1 or t >= x + 2:
                r, gr = g.out_edge(v, RED), g.out_edge(v, GREEN)
                if r is not None and gr is not None:
                    above_r, above_g = g.out_edge(r.dst, GREEN), g.out_edge(gr.dst, RED)
                    if above_r is None or above_g is None or above_r.dst != above_g.dst:
                        rep.add(prop, [v], f"outgoing pair does not close (t1={t}, X={x})")
    elif prop == "double-half":
        crit = _red_criticals(g)
        for path in _strings(g, RED):
            hits = []
            for v in path:
                t, x = crit[v]
                e_in = g.in_edge(v, GREEN)
                if e_in is not None and e_in.label == 1:
                    hits.append(e_in)
                    if t != x - 1:
                        rep.add(prop, [e_in], f"1/2 edge enters at t1={t}, not X-1={x - 1}")
                e_out = g.out_edge(v, GREEN)
                if e_out is not None and e_out.label == 1:
                    hits.append(e_out)
                    if t != x + 1:
                        rep.add(prop, [e_out], f"1/2 edge leaves at t1={t}, not X+1={x + 1}")
            if len(hits) > 2:
                rep.add(prop, path[:1], f"{len(hits)} edges labelled 1/2 meet this red string")
    else:
        raise ValueError(f"unknown derived property {prop!r}")
    return rep


def check_all(g: ColoredGraph, axioms=AXIOMS, derived: bool = False,
              warnings: bool = False) -> AxiomReport:
    """Run the requested checks in dependency order.

    Unlabelled input is decorated from string statistics once K0-K2 pass.
    Checks whose prerequisites fail are listed in ``skipped``.
    """
    from .crystal import decorate_colored

    report = AxiomReport()
    wanted = list(axioms)
    k0 = check_axiom(g, "K0")
    if "K0" in wanted or not k0.passed:  # a K0 failure blocks everything else
        report = report.merge(k0)
    rest = [a for a in wanted if a != "K0"] + (list(DERIVED) if derived else [])
    if not k0.passed:
        report.skipped.extend(rest)
        return report
    for axiom in ("K1", "K2"):
        if axiom in wanted:
            report = report.merge(check_axiom(g, axiom))
    labeled = g
    if not g.labeled:
        try:
            labeled = decorate_colored(g)
        except AxiomViolationError as exc:
            report.skipped.extend(a for a in rest if a not in ("K1", "K2"))
            report.note("labels", [], f"cannot decorate: {exc}")
            return report
    k3 = check_axiom(labeled, "K3")
    if "K3" in wanted:
        report = report.merge(k3)
    for axiom in ("K4", "K5"):
        if axiom in wanted:
            report = report.merge(check_axiom(labeled, axiom))
    if derived:
        for prop in DERIVED:
            if prop in ("star-squares", "double-half") and not k3.passed:
                report.skipped.append(prop)
                continue
            report = report.merge(check_derived(labeled, prop))
    if warnings:
        report = report.merge(check_warnings(labeled))
        report = report.merge(_green_one_diagnostics(labeled))
    return report
