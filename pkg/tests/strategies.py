"""Hypothesis strategies for admissible configurations and small intervals."""

from hypothesis import strategies as st

from b2crystal.crossing import PATTERN_EQUALITIES, Configuration, EqualityPattern


@st.composite
def admissible(draw, lo: int = -8, hi: int = 8) -> Configuration:
    """An admissible configuration built from a chosen pattern, so nothing is filtered away."""
    need = PATTERN_EQUALITIES[draw(st.sampled_from(list(EqualityPattern)))]
    c = 2 * draw(st.integers(lo // 2, hi // 2))
    a = c if {"ab", "bc"} <= need else 2 * draw(st.integers(c // 2, hi // 2))
    if "ab" in need:
        b = a
    elif "bc" in need:
        b = c
    else:
        b = draw(st.integers(c, a))
    w = draw(st.integers(lo, hi))
    z = w if "zw" in need else draw(st.integers(w, hi))
    if "yz" in need:
        y = z
    else:
        # y + z must be even and y >= z
        y = z + 2 * draw(st.integers(0, max(0, (hi - z) // 2)))
    x = y if "xy" in need else draw(st.integers(y, max(y, hi)))
    return Configuration(a, b, c, x, y, z, w)


def intervals(max_h: int = 3, max_b: int = 2):
    return st.tuples(st.integers(0, max_h), st.integers(0, max_b).map(lambda b: 2 * b))
