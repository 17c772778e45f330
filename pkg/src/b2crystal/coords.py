"""Canonical words and coordinates of configurations in an interval.

A word is a tuple of ``(operator, exponent)`` factors written left to right
and applied rightmost first.  The first canonical word is
``F1^n F2^m F1^p F2^q`` and the second ``F2^q' F1^p' F2^m' F1^n'``; both
move a configuration to the sink of its interval.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crossing import FORWARD, Bounds, Configuration, EqualityPattern, equality_patterns
from .errors import ConsistencyError, DomainError

Word = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CanonicalCoords:
    first: tuple[int, int, int, int]   # (n, m, p, q)
    second: tuple[int, int, int, int]  # (n', m', p', q')

    def to_dict(self) -> dict:
        return {"first": list(self.first), "second": list(self.second)}


def first_word(n: int, m: int, p: int, q: int) -> Word:
    return ((1, n), (2, m), (1, p), (2, q))


def second_word(n2: int, m2: int, p2: int, q2: int) -> Word:
    return ((2, q2), (1, p2), (2, m2), (1, n2))


def apply_word(f: Configuration, word: Word, bounds: Bounds) -> Configuration | None:
    """Apply ``word`` rightmost factor first; None as soon as a step is undefined."""
    for op, exp in reversed(word):
        if exp < 0:
            raise ValueError(f"negative exponent {exp}")
        for _ in range(exp):
            f = FORWARD[op](f, bounds)
            if f is None:
                return None
    return f


def _case_first(kind: EqualityPattern, f: Configuration, H: int, A: int):
    a, b, c, x, y, z, w = f
    d = H - x  # H - h in every case, since h = f(x)
    if kind is EqualityPattern.A:
        if a - b >= b - c:
            return d, (A - c) // 2 + d, d + A - b, (A - a) // 2
        return d, (A + a) // 2 - b + d, d + A - b, (A - a) // 2 + b - (a + c) // 2
    if kind is EqualityPattern.B1:
        return d, d + (A - a) // 2, H - z + A - a, x - (y + z) // 2 + (A - a) // 2
    if kind is EqualityPattern.B2:
        return d, d + (A - a) // 2, x - w + A - a + d, (x - z) // 2 + (A - a) // 2
    if kind is EqualityPattern.C1:
        return d, (A - b) // 2 + d, x - w + A - b + d, (A - a) // 2
    return d, (A - a) // 2 + d, x - y + A - a + d, (a - c) // 2 + x - y + (A - a) // 2


def _case_second(kind: EqualityPattern, f: Configuration, H: int, A: int):
    a, b, c, x, y, z, w = f
    d = H - x
    if kind is EqualityPattern.A:
        return a - b + d, (A - c) // 2 + d, d + A - a, (A - a) // 2
    if kind is EqualityPattern.B1:
        return d, H - (y + z) // 2 + (A - a) // 2, H - z + A - a, (A - a) // 2
    if kind is EqualityPattern.B2:
        return z - w + d, H - (z + x) // 2 + (A - a) // 2, H - z + A - a, (A - a) // 2
    if kind is EqualityPattern.C1:
        half = (a - b) // 2  # floor; a and b = c are even, so exact
        return x - w + a - b + d, half + d + (A - a) // 2, d + A - a, (A - b) // 2 - half
    return d, (a - c) // 2 + H - y + (A - a) // 2, H - y + A - a, (A - a) // 2


def _agreeing(f: Configuration, bounds: Bounds, case) -> tuple[int, int, int, int]:
    if bounds.is_free:
        raise DomainError("canonical coordinates need interval bounds")
    if not bounds.contains(f):
        raise DomainError(f"{f} is outside the interval")
    kinds = equality_patterns(f)
    if not kinds:
        raise DomainError(f"{f} is not admissible")
    values = {k: case(k, f, bounds.h_cap, bounds.a_cap) for k in kinds}
    if len(set(values.values())) != 1:
        raise ConsistencyError(f"case formulas disagree on {f}: {values}")
    return next(iter(values.values()))


def coords_first(f: Configuration, bounds: Bounds) -> tuple[int, int, int, int]:
    """``(n, m, p, q)`` with ``F1^n F2^m F1^p F2^q f`` the sink."""
    return _agreeing(f, bounds, _case_first)


def coords_second(f: Configuration, bounds: Bounds) -> tuple[int, int, int, int]:
    """``(n', m', p', q')`` with ``F2^q' F1^p' F2^m' F1^n' f`` the sink."""
    return _agreeing(f, bounds, _case_second)


def canonical_coords(f: Configuration, bounds: Bounds) -> CanonicalCoords:
    return CanonicalCoords(coords_first(f, bounds), coords_second(f, bounds))


def in_cone(coords: tuple[int, int, int, int], which: str) -> bool:
    """C1 holds primed tuples ``2m' >= p' >= 2q'``; C2 unprimed ``p >= m >= n``."""
    n, m, p, q = coords
    if which == "C1":
        return 2 * m >= p >= 2 * q
    if which == "C2":
        return p >= m >= n
    raise ValueError(f"unknown cone {which!r}")


def transform(second: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """Piecewise-linear map from second-word to first-word coordinates."""
    n2, m2, p2, q2 = second
    q = max(q2, p2 - m2, m2 - n2)
    p = max(p2, n2 + 2 * p2 - 2 * m2, 2 * q2 + n2)
    m = min(m2, 2 * m2 - p2 + q2, n2 + q2)
    n = min(n2, 2 * m2 - p2, p2 - 2 * q2)
    return n, m, p, q


@dataclass
class CoordCheck:
    vertex: Configuration
    coords: CanonicalCoords
    failures: list[str]


def check_vertex(f: Configuration, bounds: Bounds) -> CoordCheck:
    """Every per-vertex property: words reach the sink, cones, transform, sums."""
    fails = []
    try:
        cc = canonical_coords(f, bounds)
    except ConsistencyError as exc:
        return CoordCheck(f, CanonicalCoords((0,) * 4, (0,) * 4), [str(exc)])
    sink = bounds.sink()
    if apply_word(f, first_word(*cc.first), bounds) != sink:
        fails.append("first word does not reach the sink")
    if apply_word(f, second_word(*cc.second), bounds) != sink:
        fails.append("second word does not reach the sink")
    if min(cc.first + cc.second) < 0:
        fails.append("negative exponent")
    if not in_cone(cc.first, "C2"):
        fails.append(f"first {cc.first} not in C2")
    if not in_cone(cc.second, "C1"):
        fails.append(f"second {cc.second} not in C1")
    if transform(cc.second) != cc.first:
        fails.append(f"transform{cc.second} = {transform(cc.second)} != {cc.first}")
    n, m, p, q = cc.first
    n2, m2, p2, q2 = cc.second
    if n + p != n2 + p2 or m + q != m2 + q2:
        fails.append("sum identities fail")
    return CoordCheck(f, cc, fails)


def expected_maxima(h: int, a: int) -> dict[str, int]:
    return {"q": a // 2, "p": a + h, "m": h + a // 2, "n": h}


def attained_maxima(coords: list[tuple[int, int, int, int]]) -> dict[str, int]:
    """Componentwise maxima of (n, m, p, q) tuples, keyed by letter."""
    keys = ("n", "m", "p", "q")
    return {k: max(c[i] for c in coords) for i, k in enumerate(keys)}
