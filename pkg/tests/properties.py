"""Randomized property checks for divided differences, shared by the module
tests and the acceptance suite.  Every function returns the list of
counterexamples it found."""
from __future__ import annotations

import random

from echow.coords import tc_ring, tc_to_weights
from echow.polycore import Polynomial
from echow.rootweyl import ParabolicSpec, canonicalize, reflect, rho_point
from echow.schubert import bgg_expand, delta, divided_difference, parabolic_support_ok


def random_reduced_word(rs, k: int, rng: random.Random) -> tuple:
    """A reduced word of length k built by random left ascents."""
    u = (1,) * rs.rank
    word: tuple = ()
    for _ in range(k):
        i = rng.choice([j for j in range(1, rs.rank + 1) if u[j - 1] > 0])
        u = rs.reflect_vector(i, u)
        word = (i,) + word
    return word


def another_reduced_word(rs, word, rng: random.Random) -> tuple:
    """A reduced word of the same element, peeling random left descents."""
    u = rho_point(rs, word)
    out = []
    while any(x < 0 for x in u):
        i = rng.choice([j for j in range(1, rs.rank + 1) if u[j - 1] < 0])
        out.append(i)
        u = rs.reflect_vector(i, u)
    return tuple(out)


def random_poly(nvars: int, degree: int, rng: random.Random, terms: int = 4) -> Polynomial:
    out = {}
    for _ in range(terms):
        e = [0] * nvars
        for _ in range(degree):
            e[rng.randrange(nvars)] += 1
        out[tuple(e)] = out.get(tuple(e), 0) + rng.randint(-5, 5)
    return Polynomial.from_ints(nvars, out)


def reduced_word_independence(groups, trials: int, rng: random.Random) -> list:
    bad = []
    for n in range(trials):
        rs = groups[n % len(groups)]
        k = rng.randint(1, 6)
        w1 = random_reduced_word(rs, k, rng)
        w2 = another_reduced_word(rs, w1, rng)
        f = random_poly(rs.rank, k + rng.randint(0, 2), rng)
        if canonicalize(rs, w1).word != canonicalize(rs, w2).word:
            bad.append(("not the same element", w1, w2))
        elif divided_difference(rs, w1, f) != divided_difference(rs, w2, f):
            bad.append((w1, w2, f))
    return bad


def twisted_leibniz(groups, trials: int, rng: random.Random) -> list:
    bad = []
    for n in range(trials):
        rs = groups[n % len(groups)]
        i = rng.randint(1, rs.rank)
        f = random_poly(rs.rank, rng.randint(1, 3), rng)
        g = random_poly(rs.rank, rng.randint(1, 3), rng)
        lhs = delta(rs, i, f * g)
        rhs = delta(rs, i, f) * g + reflect(rs, i, f) * delta(rs, i, g)
        if lhs != rhs:
            bad.append((i, f, g))
    return bad


def delta_squared(groups, trials: int, rng: random.Random) -> list:
    bad = []
    for n in range(trials):
        rs = groups[n % len(groups)]
        f = random_poly(rs.rank, rng.randint(2, 5), rng)
        for i in range(1, rs.rank + 1):
            if not delta(rs, i, delta(rs, i, f)).is_zero():
                bad.append((i, f))
    return bad


def bgg_integrality(groups, trials: int, rng: random.Random) -> list:
    bad = []
    for n in range(trials):
        rs = groups[n % len(groups)]
        f = random_poly(rs.rank, rng.randint(1, 4), rng, terms=3)
        if not bgg_expand(rs, f).is_integral():
            bad.append(f)
    return bad


def parabolic_support(groups, trials: int, rng: random.Random) -> list:
    """Polynomials in t and the c_i are W_P2-invariant; their expansions must
    live on minimal coset representatives of W/W_P2."""
    bad = []
    for n in range(trials):
        rs = groups[n % len(groups)]
        ring = tc_ring(rs.kind)
        d = rng.randint(1, 5)
        monos = ring.monomials(d)
        f = ring.zero()
        for m in rng.sample(monos, min(3, len(monos))):
            f = f + rng.randint(-4, 4) * Polynomial.from_ints(ring.nvars, {m: 1})
        exp = bgg_expand(rs, tc_to_weights(rs, f, ring))
        if not parabolic_support_ok(rs, exp, ParabolicSpec.complement_of(rs.rank, [2])):
            bad.append(f)
    return bad
