import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from b2crystal.crossing import (
    ZERO,
    Bounds,
    Configuration,
    EqualityPattern as P,
    STAR_PATTERN,
    apply_e1,
    apply_e2,
    apply_f1,
    apply_f2,
    equality_patterns,
    is_admissible,
    realized_equalities,
    star,
)
from b2crystal.crystal import generate
from b2crystal.errors import DomainError, OrderingError

from strategies import admissible

C = Configuration


def cfg(top, bottom):
    return C(*top, *bottom)


FREE = Bounds.free()


@pytest.mark.parametrize("f, expected", [
    (ZERO, {P.A, P.B1, P.B2, P.C1, P.C2}),
    (cfg((2, 1, 0), (0, 0, 0, 0)), {P.A}),
    (cfg((0, 0, 0), (2, 1, 1, 0)), set()),
    (cfg((0, 0, 0), (2, 2, 0, 0)), {P.B1, P.B2}),
])
def test_equality_patterns_examples(f, expected):
    assert equality_patterns(f) == expected


def test_equality_patterns_rejects_unordered_chains():
    with pytest.raises(OrderingError):
        equality_patterns(cfg((0, 1, 0), (0, 0, 0, 0)))
    with pytest.raises(OrderingError):
        equality_patterns(cfg((0, 0, 0), (0, 1, 0, 0)))


@pytest.mark.parametrize("f, ok", [
    (cfg((0, 0, 0), (1, 0, 0, 0)), True),
    (cfg((1, 0, 0), (0, 0, 0, 0)), False),
    (cfg((0, 0, 0), (2, 1, 1, 0)), False),
    (cfg((0, 1, 0), (0, 0, 0, 0)), False),
    (cfg((0, 0, 0), (1, 1, 0, 0)), False),  # y + z odd
])
def test_is_admissible_examples(f, ok):
    assert is_admissible(f) is ok


def test_three_equalities_are_not_enough():
    # {ab, bc, yz} has three equalities but contains no pattern
    f = cfg((0, 0, 0), (2, 1, 1, 0))
    assert len(realized_equalities(f)) == 3
    assert not is_admissible(f)


@pytest.mark.parametrize("f, bounds, expected", [
    (cfg((0, 0, 0), (1, 1, 1, 0)), Bounds.interval(1, 0), cfg((0, 0, 0), (1, 1, 1, 1))),
    (cfg((2, 0, 0), (0, 0, 0, 0)), Bounds.interval(0, 2), cfg((2, 1, 0), (0, 0, 0, 0))),
    (ZERO, Bounds.interval(1, 0), cfg((0, 0, 0), (1, 0, 0, 0))),
    (cfg((2, 2, 2), (0, 0, 0, 0)), Bounds.interval(0, 2), None),
])
def test_apply_f1_examples(f, bounds, expected):
    assert apply_f1(f, bounds) == expected


@pytest.mark.parametrize("f, bounds, expected", [
    (cfg((2, 2, 0), (0, 0, 0, 0)), Bounds.interval(0, 2), cfg((2, 2, 2), (0, 0, 0, 0))),
    (cfg((0, 0, 0), (2, 0, 0, 0)), Bounds.interval(2, 0), cfg((0, 0, 0), (2, 2, 0, 0))),
    (cfg((0, 0, 0), (1, 0, 0, 0)), Bounds.interval(1, 0), cfg((0, 0, 0), (1, 1, 1, 0))),
    (cfg((0, 0, 0), (2, 2, 0, 0)), Bounds.interval(2, 0), cfg((0, 0, 0), (2, 2, 2, 0))),
    (ZERO, Bounds.interval(0, 2), cfg((2, 0, 0), (0, 0, 0, 0))),
    (cfg((2, 1, 0), (0, 0, 0, 0)), Bounds.interval(0, 2), None),
])
def test_apply_f2_examples(f, bounds, expected):
    assert apply_f2(f, bounds) == expected


def test_printed_branch_one_guard_would_break_admissibility():
    # a - b < a - c holds at (2,1,0|0^4); raising c there gives b < c
    f = cfg((2, 1, 0), (0, 0, 0, 0))
    assert not is_admissible(f._replace(c=2))
    assert apply_f2(f, FREE) == cfg((4, 1, 0), (0, 0, 0, 0))


def test_operators_reject_bad_input():
    with pytest.raises(DomainError):
        apply_f1(cfg((1, 0, 0), (0, 0, 0, 0)), FREE)
    with pytest.raises(DomainError):
        apply_f2(cfg((0, 0, 0), (3, 0, 0, 0)), Bounds.interval(2, 0))


@pytest.mark.parametrize("fn, f, bounds, expected", [
    (apply_e1, cfg((0, 0, 0), (1, 0, 0, 0)), Bounds.interval(1, 0), ZERO),
    (apply_e2, cfg((2, 2, 2), (0, 0, 0, 0)), Bounds.interval(0, 2), cfg((2, 2, 0), (0, 0, 0, 0))),
    (apply_e1, ZERO, Bounds.interval(1, 0), None),
    (apply_e2, ZERO, Bounds.interval(0, 2), None),
])
def test_inverse_examples(fn, f, bounds, expected):
    assert fn(f, bounds) == expected


def test_star_examples():
    assert star(ZERO) == ZERO
    f = cfg((0, 0, 0), (1, 0, 0, 0))
    assert star(f) == cfg((0, 0, 0), (0, 0, 0, -1))
    assert equality_patterns(f) == {P.B1, P.C2}
    assert equality_patterns(star(f)) == {P.B2, P.C1}


def test_star_is_an_involution_on_b22():
    for f in generate(Bounds.interval(2, 2)).configs:
        assert star(star(f)) == f


@pytest.mark.parametrize("h, a", [(h, a) for h in range(5) for a in range(0, 9, 2)])
def test_inverses_exhaustive(h, a):
    b = Bounds.interval(h, a)
    g = generate(b)
    for f in g.configs:
        for fwd, bwd in ((apply_f1, apply_e1), (apply_f2, apply_e2)):
            up = fwd(f, b)
            if up is not None:
                assert up in g.index
                assert bwd(up, b) == f
            down = bwd(f, b)  # raises ConsistencyError on two preimages
            if down is not None:
                assert fwd(down, b) == f


@settings(max_examples=300)
@given(admissible())
def test_free_operators_total_and_invertible(f):
    for fwd, bwd in ((apply_f1, apply_e1), (apply_f2, apply_e2)):
        up = fwd(f, FREE)
        assert up is not None and is_admissible(up)
        assert bwd(up, FREE) == f
        down = bwd(f, FREE)
        assert down is not None and fwd(down, FREE) == f


@settings(max_examples=300)
@given(admissible())
def test_star_anti_automorphism(f):
    s = star(f)
    assert is_admissible(s)
    assert star(s) == f
    assert {STAR_PATTERN[p] for p in equality_patterns(f)} == equality_patterns(s)
    assert apply_e1(s, FREE) == star(apply_f1(f, FREE))
    assert apply_e2(s, FREE) == star(apply_f2(f, FREE))


@settings(max_examples=300)
@given(admissible(), st.integers(0, 6), st.integers(0, 4))
def test_interval_operators_stay_inside(f, h, b):
    bounds = Bounds.interval(h, 2 * b)
    if not bounds.contains(f):
        return
    for fwd in (apply_f1, apply_f2):
        g = fwd(f, bounds)
        if g is not None:
            assert is_admissible(g) and bounds.contains(g)


@settings(max_examples=300)
@given(admissible())
def test_patterns_imply_three_equalities(f):
    assert equality_patterns(f)
    assert len(realized_equalities(f)) >= 3
