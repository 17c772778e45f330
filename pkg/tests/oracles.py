"""Oracles that share no code with the package under test.

Freudenthal's recursion gives sp(4) weight multiplicities; a brute-force
search finds every exponent tuple of a given word shape reaching the sink.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

# C2 in the e-basis: positive roots and rho.
POSITIVE_ROOTS = ((1, -1), (1, 1), (2, 0), (0, 2))
RHO = (2, 1)


def _dot(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1]


def _add(u, v, k=1):
    return (u[0] + k * v[0], u[1] + k * v[1])


def _dominant(mu):
    a, b = sorted((abs(mu[0]), abs(mu[1])), reverse=True)
    return (a, b)


def _orbit(mu):
    a, b = mu
    return {(s * x, t * y) for x, y in ((a, b), (b, a)) for s in (1, -1) for t in (1, -1)}


def highest_weight(h: int, b: int):
    """h * (first fundamental) + b * (second fundamental), e-coordinates."""
    return (h + b, b)


def _below(lam, mu) -> bool:
    # lam - mu = n1 (1,-1) + n2 (0,2) with n1, n2 >= 0
    n1 = lam[0] - mu[0]
    rest = lam[1] - mu[1] + n1
    return n1 >= 0 and rest >= 0 and rest % 2 == 0


def multiplicities(h: int, b: int) -> dict:
    """Dominant weight -> multiplicity for the irreducible module V(lam)."""
    lam = highest_weight(h, b)
    norm = _dot(_add(lam, RHO), _add(lam, RHO))

    @lru_cache(maxsize=None)
    def mult(mu) -> int:
        mu = _dominant(mu)
        if not _below(lam, mu):
            return 0
        if mu == lam:
            return 1
        total = 0
        for alpha in POSITIVE_ROOTS:
            k = 1
            while _below(lam, _dominant(_add(mu, alpha, k))):
                nu = _add(mu, alpha, k)
                total += mult(nu) * _dot(nu, alpha)
                k += 1
        denom = norm - _dot(_add(mu, RHO), _add(mu, RHO))
        value = Fraction(2 * total, denom)
        assert value.denominator == 1
        return int(value)

    out = {}
    for m1 in range(lam[0], -1, -1):
        for m2 in range(m1, -1, -1):
            if _below(lam, (m1, m2)):
                m = mult((m1, m2))
                if m:
                    out[(m1, m2)] = m
    return out


def freudenthal_dimension(h: int, b: int) -> int:
    return sum(m * len(_orbit(mu)) for mu, m in multiplicities(h, b).items())


def character(h: int, b: int) -> Counter:
    """All weights with multiplicity, in simple-coroot coordinates (mu1 - mu2, mu2)."""
    out = Counter()
    for mu, m in multiplicities(h, b).items():
        for nu in _orbit(mu):
            out[(nu[0] - nu[1], nu[1])] += m
    return out


def word_solutions(f, sink, ops, first_op: int, total1: int, total2: int):
    """Every exponent tuple of a four-factor word reaching ``sink``.

    The word alternates operators, starting (rightmost) with ``first_op``;
    ``ops`` maps 1, 2 to step functions returning None when undefined.
    Returned tuples list exponents in application order.
    """
    other = 3 - first_op
    tot = {1: total1, 2: total2}
    sols = []
    for e1 in range(tot[first_op] + 1):
        for e2 in range(tot[other] + 1):
            seq = ((first_op, e1), (other, e2), (first_op, tot[first_op] - e1), (other, tot[other] - e2))
            g = f
            for op, k in seq:
                for _ in range(k):
                    g = None if g is None else ops[op](g)
            if g == sink:
                sols.append(tuple(k for _, k in seq))
    return sols


# Colour sequences of the two fundamental sp(4) crystals, read from the
# source: 1 is the short simple root (red), 2 the long one (green).
FUNDAMENTAL_PATHS = {(1, 0): (1, 2, 1), (0, 2): (2, 1, 1, 2)}


def path_labels(colors):
    """(colour, label halves) along a path crystal with the given colour word.

    h_i(v) counts the run of colour-i edges leaving v; a red edge gets
    2 * (h_2(head) - h_2(tail)) halves and a green one h_1(head) - h_1(tail).
    """
    n = len(colors) + 1

    def h(i, v):
        k = 0
        while v + k < n - 1 and colors[v + k] == i:
            k += 1
        return k

    out = []
    for v, c in enumerate(colors):
        if c == 1:
            out.append((1, 2 * (h(2, v + 1) - h(2, v))))
        else:
            out.append((2, h(1, v + 1) - h(1, v)))
    return out
