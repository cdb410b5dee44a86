"""Weyl group invariants from orbit sums.

For each group a finite set S of linear forms, stable under W, is built from
x_i = 2 t_i - t (E6, E7; for E7 also x_8 = t) or x_i = 2 t_i - 2t/3 with
x_9 = -2t/3 (E8).  The power sums I_n = sum_{y in S} y^n are invariant; the
basic degrees give polynomial generators of the invariant ring over Q.

Two routes compute I_n.  The direct route expands each y^n in the weight
ring and is authoritative.  The fast route writes I_n through power sums s_k
of the x_i, Newton's identities and the elementary functions d_k = e_k(x),
all inside Q[t, c_2, ..., c_l]; it is cross-checked against the direct one.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Sequence

from .coords import tc_ring, tc_to_weights
from .errors import CapExceeded
from .groebner import TruncatedGroebner
from .polycore import Polynomial
from .rootweyl import INVARIANT_DEGREES, RootSystem, root_system

ORBIT_SIZES = {"E6": 27, "E7": 56, "E8": 240}

#: degree caps for the n_j verification
NJ_CAPS = {"E6": 12, "E7": 14, "E8": 15}


# ---------------------------------------------------------------------------
# orbit sets

@dataclass(frozen=True)
class OrbitSet:
    kind: str
    elements: tuple   # weight coordinates, Fractions

    def __len__(self):
        return len(self.elements)

    def is_stable(self, rs: RootSystem) -> bool:
        """Each simple reflection permutes the elements (as a multiset)."""
        from collections import Counter
        base = Counter(self.elements)
        for i in range(1, rs.rank + 1):
            if Counter(rs.reflect_vector(i, y) for y in self.elements) != base:
                return False
        return True

    def element_sum(self) -> tuple:
        n = len(self.elements[0])
        return tuple(sum((y[k] for y in self.elements), Fraction(0)) for k in range(n))

    def closed_under_negation(self) -> bool:
        s = set(self.elements)
        return all(tuple(-a for a in y) in s for y in self.elements)


def _x_forms(rs: RootSystem) -> list:
    tco = rs.t_coordinates
    n = rs.rank
    t = [Fraction(a) for a in tco[n]]
    ti = [[Fraction(a) for a in tco[i]] for i in range(n)]
    if rs.kind in ("E6", "E7"):
        xs = [[2 * a - b for a, b in zip(v, t)] for v in ti]
        if rs.kind == "E7":
            xs.append(list(t))
    else:
        third = Fraction(2, 3)
        xs = [[2 * a - third * b for a, b in zip(v, t)] for v in ti]
        xs.append([-third * b for b in t])
    return [tuple(x) for x in xs], tuple(t)


def x_forms(rs: RootSystem) -> list:
    """The linear forms x_i in weight coordinates."""
    return _x_forms(rs)[0]


def orbit_set(rs: RootSystem) -> OrbitSet:
    xs, t = _x_forms(rs)

    def add(*vs):
        return tuple(sum(c) for c in zip(*vs))

    def neg(v):
        return tuple(-a for a in v)

    elems = []
    if rs.kind == "E6":
        elems += [add(a, b) for a, b in combinations(xs, 2)]
        elems += [add(t, neg(x)) for x in xs]
        elems += [add(neg(t), neg(x)) for x in xs]
    elif rs.kind == "E7":
        for a, b in combinations(xs, 2):
            s = add(a, b)
            elems += [s, neg(s)]
    else:
        for a, b in combinations(xs, 2):
            s = add(a, neg(b))
            elems += [s, neg(s)]
        for a, b, c in combinations(xs, 3):
            s = add(a, b, c)
            elems += [s, neg(s)]
    out = OrbitSet(rs.kind, tuple(elems))
    if len(out) != ORBIT_SIZES[rs.kind]:
        raise AssertionError(f"orbit set of {rs.kind} has {len(out)} elements")
    return out


# ---------------------------------------------------------------------------
# direct orbit sums

def _compositions(n: int, k: int):
    if k == 1:
        yield (n,)
        return
    for a in range(n, -1, -1):
        for rest in _compositions(n - a, k - 1):
            yield (a,) + rest


@lru_cache(maxsize=None)
def _composition_table(n: int, k: int) -> tuple:
    fn = factorial(n)
    out = []
    for c in _compositions(n, k):
        m = fn
        for a in c:
            m //= factorial(a)
        out.append((c, m))
    return tuple(out)


def power_of_linear(coeffs: Sequence, n: int, acc: dict | None = None, scale: int = 1):
    """Add scale * (sum coeffs_i x_i)^n, with integer coeffs, into ``acc``."""
    nv = len(coeffs)
    support = [i for i, a in enumerate(coeffs) if a]
    acc = {} if acc is None else acc
    if not support:
        if n == 0:
            e = (0,) * nv
            acc[e] = acc.get(e, 0) + scale
        return acc
    a = [coeffs[i] for i in support]
    pows = [[1] * (n + 1) for _ in a]
    for j, x in enumerate(a):
        for p in range(1, n + 1):
            pows[j][p] = pows[j][p - 1] * x
    k = len(support)
    for comp, mult in _composition_table(n, k):
        c = mult * scale
        e = [0] * nv
        for j, p in enumerate(comp):
            c *= pows[j][p]
            e[support[j]] = p
        e = tuple(e)
        acc[e] = acc.get(e, 0) + c
    return acc


@dataclass(frozen=True)
class InvariantPolynomial:
    n: int
    value: Polynomial

    def is_invariant(self, rs: RootSystem) -> bool:
        from .rootweyl import reflect
        return all(reflect(rs, i, self.value) == self.value for i in range(1, rs.rank + 1))


def _common_denominator(vs) -> int:
    from math import lcm
    d = 1
    for v in vs:
        for a in v:
            d = lcm(d, Fraction(a).denominator)
    return d


def invariant_I(rs: RootSystem, n: int) -> InvariantPolynomial:
    """I_n = sum over the orbit set of y^n, by direct expansion."""
    if n < 1:
        raise ValueError("n must be positive")
    S = orbit_set(rs)
    elems = list(S.elements)
    factor = 1
    if S.closed_under_negation():
        if n % 2:
            return InvariantPolynomial(n, Polynomial.zero(rs.rank))
        seen = set()
        half = []
        for y in elems:
            if tuple(-a for a in y) not in seen:
                seen.add(y)
                half.append(y)
        elems = half
        factor = 2
    den = _common_denominator(elems)
    acc: dict = {}
    for y in elems:
        power_of_linear([int(a * den) for a in y], n, acc, factor)
    acc = {e: v for e, v in acc.items() if v}
    return InvariantPolynomial(n, Polynomial.from_ints(rs.rank, acc, den ** n))


def direct_power_sum(rs: RootSystem, n: int) -> Polynomial:
    """s_n = sum x_i^n in the weight ring."""
    xs = x_forms(rs)
    den = _common_denominator(xs)
    acc: dict = {}
    for x in xs:
        power_of_linear([int(a * den) for a in x], n, acc)
    return Polynomial.from_ints(rs.rank, {e: v for e, v in acc.items() if v}, den ** n)


def direct_elementary(rs: RootSystem, n: int) -> Polynomial:
    """d_n = e_n(x_1, ...) in the weight ring."""
    xs = [Polynomial.linear(x) for x in x_forms(rs)]
    e = [Polynomial.constant(rs.rank, 1)] + [Polynomial.zero(rs.rank)] * len(xs)
    for x in xs:
        for j in range(len(xs), 0, -1):
            e[j] = e[j] + e[j - 1] * x
    return e[n] if n < len(e) else Polynomial.zero(rs.rank)


# ---------------------------------------------------------------------------
# the route through t and the c_i

def _num_x(kind: str) -> int:
    return {"E6": 6, "E7": 8, "E8": 9}[kind]


def _c(kind: str, i: int) -> Polynomial:
    ring = tc_ring(kind)
    rank = ring.nvars
    if i == 0:
        return ring.one()
    if i == 1:
        return 3 * ring.gen("t")
    if i > rank:
        return ring.zero()
    return ring.gen(f"c{i}")


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def d_formula(kind: str, n: int, variant: str = "corrected") -> Polynomial:
    """d_n in Q[t, c] from a closed formula.

    ``corrected`` is obtained by expanding e_n(2t_i - a) and, for E7 and E8,
    the extra form; ``printed`` evaluates the printed E7/E8 rows literally:
    the E7 inner sum over a reused index is a constant, and the E8 binomial
    with lower entry "n--i" is read as n + i.  For E6 both agree.
    """
    ring = tc_ring(kind)
    t = ring.gen("t")
    acc = ring.zero()
    for i in range(0, n + 1):
        ci = _c(kind, i)
        if ci.is_zero():
            continue
        if kind == "E6":
            coef = _binom(6 - i, n - i)
            base = -t
        elif kind == "E7":
            if variant == "printed":
                inner = sum(_binom(7 - k, n - 1 - k) for k in range(0, n + 1))
                coef = _binom(7 - i, n - i) - inner
            else:
                coef = _binom(7 - i, n - i) - _binom(7 - i, n - 1 - i)
            base = -t
        else:
            if variant == "printed":
                coef = _binom(8 - i, n - i) + _binom(8 - i, n + i)
            else:
                coef = _binom(8 - i, n - i) + _binom(8 - i, n - 1 - i)
            base = Fraction(-2, 3) * t
        if coef:
            acc = acc + coef * (2 ** i) * (base ** (n - i)) * ci
    return acc


@lru_cache(maxsize=None)
def power_sums_tc(kind: str, top: int) -> tuple:
    """s_0..s_top in Q[t, c] via Newton's identities over the corrected d's."""
    ring = tc_ring(kind)
    d = [ring.one()] + [d_formula(kind, k) for k in range(1, top + 1)]
    s = [Polynomial.constant(ring.nvars, _num_x(kind))]
    for n in range(1, top + 1):
        acc = ((-1) ** (n - 1) * n) * d[n]
        for i in range(1, n):
            acc = acc + ((-1) ** (i - 1)) * s[n - i] * d[i]
        s.append(acc)
    return tuple(s)


def closed_form_I(kind: str, n: int) -> Polynomial:
    """I_n in Q[t, c] from the closed forms in the power sums s_k."""
    ring = tc_ring(kind)
    s = power_sums_tc(kind, n)
    t = ring.gen("t")
    if kind == "E6":
        acc = Fraction(6 - 2 ** (n - 1)) * s[n]
        for i in range(2, n - 1):
            acc = acc + Fraction(comb(n, i), 2) * s[i] * s[n - i]
        for j in range(0, n // 2 + 1):
            acc = acc + (2 * (-1) ** n * comb(n, 2 * j)) * s[n - 2 * j] * t ** (2 * j)
        return acc
    if n % 2:
        return ring.zero()
    if kind == "E7":
        acc = (16 - 2 ** n) * s[n]
        for i in range(2, n - 1):
            acc = acc + comb(n, i) * s[i] * s[n - i]
        return acc
    acc = (2 * 3 ** (n - 1)) * s[n]
    for i in range(0, n + 1):
        acc = acc + (comb(n, i) * ((-1) ** (n - i) - 2 ** (n - i))) * s[i] * s[n - i]
    triple = ring.zero()
    for i in range(0, n + 1):
        for j in range(0, n - i + 1):
            triple = triple + (comb(n, i) * comb(n - i, j)) * s[i] * s[j] * s[n - i - j]
    return acc + triple / 3


@lru_cache(maxsize=None)
def invariant_tc(kind: str, n: int) -> Polynomial:
    return closed_form_I(kind, n)


def basic_invariants_tc(kind: str, max_degree: int | None = None) -> dict:
    return {n: invariant_tc(kind, n) for n in INVARIANT_DEGREES[kind]
            if max_degree is None or n <= max_degree}


_IDEALS: dict = {}


def invariant_ideal(kind: str, degree: int) -> TruncatedGroebner:
    """The ideal of positive degree invariants in Q[t, c], enough for ``degree``."""
    gens = tuple(n for n in INVARIANT_DEGREES[kind] if n <= degree)
    key = (kind, gens)
    if key not in _IDEALS:
        _IDEALS[key] = TruncatedGroebner(tc_ring(kind), [invariant_tc(kind, n) for n in gens])
    return _IDEALS[key]


def _partial(f: Polynomial, i: int) -> Polynomial:
    out = {}
    for e, v in f.numerators.items():
        if e[i]:
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = v * e[i]
    return Polynomial.from_ints(f.nvars, out, f.denominator)


def _evaluate(f: Polynomial, point: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for e, v in f.numerators.items():
        term = Fraction(v)
        for x, k in zip(point, e):
            if k:
                term *= x ** k
        total += term
    return total / f.denominator


def jacobian_rank_check(kind: str, seed: int = 0, max_degree: int | None = None) -> bool:
    """The basic invariants have an invertible Jacobian at a random point,
    hence are algebraically independent; with the right degrees they then
    generate the invariant ring."""
    inv = basic_invariants_tc(kind, max_degree)
    ring = tc_ring(kind)
    rng = random.Random(seed)
    point = [Fraction(rng.randint(-50, 50), rng.randint(1, 7)) for _ in range(ring.nvars)]
    rows = [[_evaluate(_partial(f, j), point) for j in range(ring.nvars)] for f in inv.values()]
    return _rank(rows) == len(rows)


def _rank(rows) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# cross-checks

def closed_form_crosscheck(rs: RootSystem, n: int):
    """Compare each closed formula in degree n with the direct computation."""
    from .schubert import CheckResult, Report
    kind = rs.kind
    report = Report(f"closed forms {kind} n={n}")
    ring = tc_ring(kind)
    direct_d = direct_elementary(rs, n)
    for variant in ("corrected", "printed"):
        if kind == "E6" and variant == "printed":
            continue
        val = tc_to_weights(rs, d_formula(kind, n, variant), ring)
        if variant == "printed":
            report.add(CheckResult(f"d_{n} formula (as printed)", val == direct_d, gated=False))
        else:
            report.add(CheckResult(f"d_{n} formula", val == direct_d))
    s_tc = power_sums_tc(kind, n)[n]
    report.add(CheckResult(f"Newton s_{n}", tc_to_weights(rs, s_tc, ring) == direct_power_sum(rs, n)))
    closed = tc_to_weights(rs, closed_form_I(kind, n), ring)
    report.add(CheckResult(f"I_{n} closed form", closed == invariant_I(rs, n).value))
    return report


# ---------------------------------------------------------------------------
# n_j

def verify_nj(rs: RootSystem, j: int, claimed: int, caps=None) -> bool:
    """True iff I_j - claimed * rho_j lies in the ideal of the rho_i with i < j.

    The test runs in the free ring on t, c_2..c_l and the gamma's; the weight
    ring is free over Q[t, c], so membership there is the same question.
    """
    from .presentations import presentation_data
    kind = rs.kind
    cap = (caps or NJ_CAPS).get(kind)
    if cap is not None and j > cap:
        raise CapExceeded(kind, j, cap, "n_j verification")
    pres = presentation_data(kind)
    ring = pres.ring
    lower = [r.poly for r in pres.relations if r.degree < j and not r.poly.is_zero()]
    rho_j = [r for r in pres.relations if r.degree == j]
    if not rho_j:
        raise ValueError(f"{kind} has no relation of degree {j}")
    if "u" in ring.names:
        # u = t_l is tied to the c_i by prod (u - t_i) = 0; inside the
        # S_(l-1)-invariants of Q[t_1..t_l] this is the only relation
        lower.append(characteristic_relation(ring, tc_ring(kind).nvars))
    I_j = ring.include(invariant_tc(kind, j), tc_ring(kind))
    target = I_j - claimed * rho_j[0].poly
    return _lower_ideal(kind, j, ring, lower).contains(target)


def characteristic_relation(ring, l: int):
    """sum_i (-1)^i c_i u^(l-i) with c_0 = 1 and c_1 = 3t, in ``ring``."""
    u = ring.gen("u")
    out = u ** l
    for i in range(1, l + 1):
        ci = 3 * ring.gen("t") if i == 1 else ring.gen(f"c{i}")
        out = out + ((-1) ** i) * ci * u ** (l - i)
    return out


_LOWER: dict = {}


def _lower_ideal(kind, j, ring, lower):
    key = (kind, j)
    if key not in _LOWER:
        _LOWER[key] = TruncatedGroebner(ring, lower)
    return _LOWER[key]


# ---------------------------------------------------------------------------
# report for the command line

#: degrees at which invariance of I_n is checked on the direct orbit sum
INVARIANCE_DEGREES = {"E6": (2, 5, 6, 8, 9, 12), "E7": tuple(range(2, 19, 2)),
                      "E8": tuple(range(2, 15, 2))}


def invariant_report(kind: str, nj_opt_in: bool = False, timings: bool = False):
    """Orbit set, invariance, closed forms and the n_j table for one group.

    Returns (payload, passed).  The n_j rows of E7 and E8 are informational.
    """
    import time
    from . import data
    from .schubert import CheckResult, Report
    rs = root_system(kind)
    rep = Report(f"invariant theory {kind}")
    S = orbit_set(rs)
    rep.add(CheckResult("orbit set size", len(S) == ORBIT_SIZES[kind],
                        expected=str(ORBIT_SIZES[kind]), computed=str(len(S))))
    rep.add(CheckResult("orbit set stable under every s_i", S.is_stable(rs)))
    rep.add(CheckResult("orbit set sums to zero", all(a == 0 for a in S.element_sum())))
    for n in INVARIANCE_DEGREES[kind]:
        rep.add(CheckResult(f"I_{n} invariant", invariant_I(rs, n).is_invariant(rs)))
    for n in INVARIANT_DEGREES[kind]:
        if n <= 14:
            rep.checks.extend(closed_form_crosscheck(rs, n).checks)
    rep.add(CheckResult("basic invariants algebraically independent",
                        jacobian_rank_check(kind, max_degree=14 if kind == "E8" else None)))
    rows = []
    nj_ok = True
    for j in sorted(data.NJ_TABLE[kind]):
        n = data.nj_value(kind, j)
        row = {"j": j, "n_j": str(n)}
        caps = {kind: 18} if nj_opt_in else None
        t0 = time.perf_counter()
        try:
            holds = verify_nj(rs, j, n, caps)
            maximal = not verify_nj(rs, j, 2 * n, caps)
        except CapExceeded:
            row["status"] = "skipped"
        else:
            row["status"] = "pass" if holds and maximal else "fail"
            if kind == "E6":
                nj_ok = nj_ok and row["status"] == "pass"
        row["gated"] = kind == "E6"
        if timings:
            row["seconds"] = round(time.perf_counter() - t0, 3)
        rows.append(row)
    payload = rep.to_json()
    payload["nj_table"] = rows
    passed = rep.passed and nj_ok
    payload["passed"] = passed
    return payload, passed
