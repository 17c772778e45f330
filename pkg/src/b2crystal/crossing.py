"""The crossing model: admissible configurations and the operators on them.

A configuration assigns integers to the seven nodes of two chains,
``a >= b >= c`` (top) and ``x >= y >= z >= w`` (bottom).  It is admissible
when ``a``, ``c`` and ``y + z`` are even and the realised equalities contain
one of five fixed equality patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

from .errors import ConsistencyError, DomainError, OrderingError


class Configuration(NamedTuple):
    a: int
    b: int
    c: int
    x: int
    y: int
    z: int
    w: int

    @classmethod
    def from_list(cls, values: Iterable[int]) -> "Configuration":
        values = [int(v) for v in values]
        if len(values) != 7:
            raise ValueError(f"expected 7 integers, got {len(values)}")
        return cls(*values)

    def __str__(self) -> str:
        return "({},{},{}|{},{},{},{})".format(*self)


ZERO = Configuration(0, 0, 0, 0, 0, 0, 0)


class EqualityPattern(str, Enum):
    A = "A"
    B1 = "B1"
    B2 = "B2"
    C1 = "C1"
    C2 = "C2"


# equality names: "ab" means a == b, etc.
PATTERN_EQUALITIES: dict[EqualityPattern, frozenset[str]] = {
    EqualityPattern.A: frozenset({"xy", "yz", "zw"}),
    EqualityPattern.B1: frozenset({"ab", "bc", "zw"}),
    EqualityPattern.B2: frozenset({"ab", "bc", "xy"}),
    EqualityPattern.C1: frozenset({"bc", "xy", "yz"}),
    EqualityPattern.C2: frozenset({"ab", "yz", "zw"}),
}

# how star acts on pattern tags
STAR_PATTERN = {
    EqualityPattern.A: EqualityPattern.A,
    EqualityPattern.B1: EqualityPattern.B2,
    EqualityPattern.B2: EqualityPattern.B1,
    EqualityPattern.C1: EqualityPattern.C2,
    EqualityPattern.C2: EqualityPattern.C1,
}


class Mode(str, Enum):
    INTERVAL = "interval"
    FREE = "free"


@dataclass(frozen=True)
class Bounds:
    """Caps of the interval B(H, A); ``free`` mode ignores them."""

    h_cap: int = 0
    a_cap: int = 0
    mode: Mode = Mode.INTERVAL

    def __post_init__(self) -> None:
        if self.mode is Mode.INTERVAL:
            if self.h_cap < 0 or self.a_cap < 0:
                raise ValueError("H and A must be nonnegative")
            if self.a_cap % 2:
                raise ValueError(f"A must be even, got {self.a_cap}")

    @classmethod
    def interval(cls, h: int, a: int) -> "Bounds":
        return cls(h, a, Mode.INTERVAL)

    @classmethod
    def free(cls) -> "Bounds":
        return cls(0, 0, Mode.FREE)

    @property
    def is_free(self) -> bool:
        return self.mode is Mode.FREE

    def contains(self, f: Configuration) -> bool:
        if self.is_free:
            return True
        return f.c >= 0 and f.w >= 0 and f.a <= self.a_cap and f.x <= self.h_cap

    def source(self) -> Configuration:
        return ZERO

    def sink(self) -> Configuration:
        A, H = self.a_cap, self.h_cap
        return Configuration(A, A, A, H, H, H, H)


def _check_ordering(f: Configuration) -> None:
    if not (f.a >= f.b >= f.c):
        raise OrderingError(f"top chain not ordered in {f}")
    if not (f.x >= f.y >= f.z >= f.w):
        raise OrderingError(f"bottom chain not ordered in {f}")


def realized_equalities(f: Configuration) -> frozenset[str]:
    pairs = {
        "ab": (f.a, f.b),
        "bc": (f.b, f.c),
        "xy": (f.x, f.y),
        "yz": (f.y, f.z),
        "zw": (f.z, f.w),
    }
    return frozenset(name for name, (u, v) in pairs.items() if u == v)


def equality_patterns(f: Configuration) -> frozenset[EqualityPattern]:
    """Every pattern whose equality set is realised by ``f``.

    Raises :class:`OrderingError` if the chains are not ordered.
    """
    _check_ordering(f)
    eqs = realized_equalities(f)
    return frozenset(p for p, need in PATTERN_EQUALITIES.items() if need <= eqs)


def is_admissible(f: Configuration) -> bool:
    try:
        patterns = equality_patterns(f)
    except OrderingError:
        return False
    if f.a % 2 or f.c % 2 or (f.y + f.z) % 2:
        return False
    return bool(patterns)


def _require(f: Configuration, b: Bounds) -> None:
    if not is_admissible(f):
        raise DomainError(f"{f} is not admissible")
    if not b.contains(f):
        raise DomainError(f"{f} lies outside {b}")


def apply_f1(f: Configuration, b: Bounds) -> Configuration | None:
    """Red operator; ``None`` when undefined on the interval."""
    _require(f, b)
    if f.w < f.z:
        return f._replace(w=f.w + 1)
    if f.b < f.a:
        return f._replace(b=f.b + 1)
    if not b.is_free and f.x >= b.h_cap:
        return None
    return f._replace(x=f.x + 1)


def apply_f2(f: Configuration, b: Bounds) -> Configuration | None:
    """Green operator; ``None`` when undefined on the interval.

    The first branch compares ``a - b`` with ``b - c``; this is the guard
    that keeps the result admissible and is the complement of the guard of
    the remaining four branches.
    """
    _require(f, b)
    if f.a - f.b < f.b - f.c:
        return f._replace(c=f.c + 2)
    if f.y + 2 <= f.x:
        return f._replace(y=f.y + 2)
    if f.y + 1 == f.x:
        return f._replace(y=f.y + 1, z=f.z + 1)
    if f.z < f.y:
        return f._replace(z=f.z + 2)
    if not b.is_free and f.a >= b.a_cap:
        return None
    return f._replace(a=f.a + 2)


def _e1_candidates(f: Configuration) -> list[Configuration]:
    return [f._replace(x=f.x - 1), f._replace(b=f.b - 1), f._replace(w=f.w - 1)]


def _e2_candidates(f: Configuration) -> list[Configuration]:
    return [
        f._replace(a=f.a - 2),
        f._replace(y=f.y - 2),
        f._replace(y=f.y - 1, z=f.z - 1),
        f._replace(z=f.z - 2),
        f._replace(c=f.c - 2),
    ]


def _preimage(f, b, candidates, forward) -> Configuration | None:
    _require(f, b)
    found = [
        g for g in candidates
        if is_admissible(g) and b.contains(g) and forward(g, b) == f
    ]
    if len(found) > 1:
        raise ConsistencyError(f"{f} has several preimages: {found}")
    return found[0] if found else None


def apply_e1(f: Configuration, b: Bounds) -> Configuration | None:
    """Inverse of :func:`apply_f1`: the unique ``g`` with ``apply_f1(g) == f``."""
    return _preimage(f, b, _e1_candidates(f), apply_f1)


def apply_e2(f: Configuration, b: Bounds) -> Configuration | None:
    """Inverse of :func:`apply_f2`."""
    return _preimage(f, b, _e2_candidates(f), apply_f2)


FORWARD = {1: apply_f1, 2: apply_f2}
BACKWARD = {1: apply_e1, 2: apply_e2}


def star(f: Configuration) -> Configuration:
    """The edge-reversing involution of the free crystal."""
    return Configuration(-f.c, -f.b, -f.a, -f.w, -f.z, -f.y, -f.x)


def is_fat(f: Configuration) -> bool:
    return f.a == f.b == f.c and f.a % 2 == 0 and f.x == f.y == f.z == f.w
