import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from b2crystal.coords import (
    apply_word,
    attained_maxima,
    canonical_coords,
    check_vertex,
    coords_first,
    coords_second,
    expected_maxima,
    first_word,
    in_cone,
    second_word,
    transform,
)
from b2crystal.crossing import FORWARD, Bounds, Configuration, EqualityPattern, equality_patterns
from b2crystal.crystal import generate
from b2crystal.errors import DomainError

import oracles

SPEC_RANGE = [(h, a) for h in range(5) for a in range(0, 9, 2)]
F210 = Configuration(2, 1, 0, 0, 0, 0, 0)
B02, B12 = Bounds.interval(0, 2), Bounds.interval(1, 2)


def test_coordinate_examples():
    assert coords_first(F210, B02) == (0, 1, 1, 0)
    assert coords_second(F210, B02) == (1, 1, 0, 0)
    assert coords_first(B12.source(), B12) == (1, 2, 3, 1)
    assert coords_second(B12.source(), B12) == (1, 2, 3, 1)
    for h, a in SPEC_RANGE:
        b = Bounds.interval(h, a)
        assert canonical_coords(b.sink(), b).first == (0, 0, 0, 0)
        assert canonical_coords(b.sink(), b).second == (0, 0, 0, 0)


def test_apply_word_examples():
    assert apply_word(F210, ((1, 0), (2, 1), (1, 1), (2, 0)), B02) == B02.sink()
    assert apply_word(B12.source(), ((1, 1), (2, 2), (1, 3), (2, 1)), B12) == B12.sink()
    assert apply_word(F210, (), B02) == F210
    # left-first application would start with F2 on (2,1,0|0^4), which is undefined
    assert apply_word(F210, ((2, 1),), B02) is None


def test_word_shapes():
    assert first_word(1, 2, 3, 4) == ((1, 1), (2, 2), (1, 3), (2, 4))
    assert second_word(1, 2, 3, 4) == ((2, 4), (1, 3), (2, 2), (1, 1))


def test_in_cone_examples():
    assert in_cone((1, 2, 3, 1), "C1")
    assert in_cone((1, 2, 3, 1), "C2")
    assert not in_cone((3, 2, 1, 0), "C2")
    with pytest.raises(ValueError):
        in_cone((0, 0, 0, 0), "C3")


def test_transform_examples():
    assert transform((1, 2, 3, 1)) == (1, 2, 3, 1)
    assert transform((0, 0, 0, 0)) == (0, 0, 0, 0)
    assert transform((1, 1, 0, 0)) == (0, 1, 1, 0)


def test_outside_interval_rejected():
    with pytest.raises(DomainError):
        coords_first(Configuration(4, 4, 4, 0, 0, 0, 0), B02)
    with pytest.raises(DomainError):
        coords_first(F210, Bounds.free())


@pytest.mark.parametrize("h, a", SPEC_RANGE)
def test_every_vertex(h, a):
    b = Bounds.interval(h, a)
    for f in generate(b).configs:
        assert check_vertex(f, b).failures == []


def test_formulas_agree_on_overlaps():
    seen = set()
    for h, a in SPEC_RANGE:
        b = Bounds.interval(h, a)
        for f in generate(b).configs:
            kinds = equality_patterns(f)
            if len(kinds) > 1:
                seen.add(frozenset(kinds))
                coords_first(f, b), coords_second(f, b)  # raise on disagreement
    assert len(seen) >= 4


def test_c1_floor_never_rounds():
    # a and c are even and b = c in case c1, so (a - b)/2 is exact
    c1 = [f for h, a in SPEC_RANGE for f in generate(Bounds.interval(h, a)).configs
          if EqualityPattern.C1 in equality_patterns(f)]
    assert c1 and all((f.a - f.b) % 2 == 0 for f in c1)


@pytest.mark.parametrize("h, a", [(h, a) for h in range(3) for a in range(0, 5, 2)])
def test_formula_exponents_among_brute_force_solutions(h, a):
    b = Bounds.interval(h, a)
    ops = {i: (lambda f, i=i: FORWARD[i](f, b)) for i in (1, 2)}
    for f in generate(b).configs:
        n, m, p, q = coords_first(f, b)
        assert (q, p, m, n) in oracles.word_solutions(f, b.sink(), ops, 2, n + p, m + q)
        n2, m2, p2, q2 = coords_second(f, b)
        assert (n2, m2, p2, q2) in oracles.word_solutions(f, b.sink(), ops, 1, n2 + p2, m2 + q2)


def _all_solutions(f, b, first_op, limit=12):
    ops = {i: (lambda g, i=i: FORWARD[i](g, b)) for i in (1, 2)}
    return [s for t1 in range(limit) for t2 in range(limit)
            for s in oracles.word_solutions(f, b.sink(), ops, first_op, t1, t2)]


def test_stated_maxima_are_exceeded_by_forced_exponents():
    # every first-shape word from this vertex has q = 2 > A/2
    sols = _all_solutions(Configuration(0, 0, 0, 1, 0, 0, 0), B12, 2)
    assert sols and {s[0] for s in sols} == {2}
    # every second-shape word from this vertex has n' = 3 > H
    sols = _all_solutions(Configuration(2, 0, 0, 0, 0, 0, 0), B12, 1)
    assert sols and {s[0] for s in sols} == {3}


@pytest.mark.parametrize("h, a", [(h, a) for h in range(6) for a in range(0, 11, 2)])
def test_attained_maxima(h, a):
    b = Bounds.interval(h, a)
    cc = [canonical_coords(f, b) for f in generate(b).configs]
    first, second = attained_maxima([c.first for c in cc]), attained_maxima([c.second for c in cc])
    assert first == {"n": h, "m": h + a // 2, "p": a + h, "q": h + a // 2}
    assert second == {"n": a + h, "m": h + a // 2, "p": a + h, "q": a // 2}
    stated = expected_maxima(h, a)
    assert (first["p"], first["m"], first["n"]) == (stated["p"], stated["m"], stated["n"])
    assert (second["m"], second["p"], second["q"]) == (stated["m"], stated["p"], stated["q"])


cone_points = st.tuples(*[st.integers(0, 12)] * 4).filter(lambda t: in_cone(t, "C1"))


@settings(max_examples=400)
@given(cone_points)
def test_transform_maps_c1_into_c2(t):
    n2, m2, p2, q2 = t
    n, m, p, q = transform(t)
    assert in_cone((n, m, p, q), "C2") and min(n, m, p, q) >= 0
    assert n + p == n2 + p2 and m + q == m2 + q2


def test_transform_is_injective_on_small_c1():
    pts = [t for t in itertools.product(range(6), repeat=4) if in_cone(t, "C1")]
    assert len({transform(t) for t in pts}) == len(pts)
