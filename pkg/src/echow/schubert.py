"""Divided differences and Schubert expansions.

For a homogeneous f of degree k in the weight ring, the characteristic map
sends f to sum_w Delta_w(f) Z_w over elements w of length k, where
Delta_w = Delta_{i1} o ... o Delta_{ik} for any reduced word i1...ik of w.
``bgg_expand`` computes all these numbers at once by growing a frontier
{w: Delta_w(f)} one length at a time: if s_i w is longer than w then
Delta_{s_i w} = Delta_i o Delta_w.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import CapExceeded, VerificationError
from .polycore import GradedRing, Polynomial, dict_mul, divide_exact_by_linear
from .rootweyl import (ParabolicSpec, RootSystem, _check_word, canonicalize, length,
                       reflect, root_system, word_from_point)

log = logging.getLogger(__name__)

#: default degree caps for expansions and kernel tests
DEFAULT_CAPS = {"E6": 12, "E7": 18, "E8": 15}


# ---------------------------------------------------------------------------
# divided differences

_DD_TABLE: dict = {}


def _dd_power(rs: RootSystem, i: int, k: int) -> tuple:
    """Delta_i(w_i^k) = sum_{m<k} w_i^m (sigma_i - w_i)^(k-1-m) as term pairs."""
    key = (rs.kind, i, k)
    tab = _DD_TABLE.get(key)
    if tab is None:
        n = rs.rank
        vi = i - 1
        wi = {tuple(1 if j == vi else 0 for j in range(n)): 1}
        b = {}
        for j in rs.neighbours(i):
            b[tuple(1 if x == j - 1 else 0 for x in range(n))] = 1
        b[tuple(1 if j == vi else 0 for j in range(n))] = -1
        one = {(0,) * n: 1}
        wpow = [one]
        bpow = [one]
        for _ in range(k):
            wpow.append(dict_mul(wpow[-1], wi))
            bpow.append(dict_mul(bpow[-1], b))
        acc: dict = {}
        for m in range(k):
            for e, v in dict_mul(wpow[m], bpow[k - 1 - m]).items():
                acc[e] = acc.get(e, 0) + v
        tab = _DD_TABLE[key] = tuple((e, v) for e, v in acc.items() if v)
    return tab


def _delta_ints(rs: RootSystem, i: int, num: dict) -> dict:
    vi = i - 1
    out: dict = {}
    for e, v in num.items():
        k = e[vi]
        if not k:
            continue
        base = list(e)
        base[vi] = 0
        for de, c in _dd_power(rs, i, k):
            ne = tuple([a + b for a, b in zip(base, de)])
            out[ne] = out.get(ne, 0) + v * c
    return {e: v for e, v in out.items() if v}


def delta(rs: RootSystem, i: int, f: Polynomial) -> Polynomial:
    """Delta_i(f) = (f - s_i f) / alpha_i."""
    if f.nvars != rs.rank:
        raise ValueError("polynomial is not in the weight ring of this root system")
    return Polynomial.from_ints(rs.rank, _delta_ints(rs, i, f.numerators), f.denominator)


def delta_reference(rs: RootSystem, i: int, f: Polynomial) -> Polynomial:
    """Delta_i by literal reflection and exact division; slow, used as an oracle."""
    try:
        return divide_exact_by_linear(f - reflect(rs, i, f), rs.alpha(i))
    except ArithmeticError as exc:  # cannot happen for a genuine reflection
        raise VerificationError(f"alpha_{i} does not divide f - s_{i} f") from exc


def divided_difference(rs: RootSystem, word, f: Polynomial, reference: bool = False) -> Polynomial:
    """Delta_w(f) for the word i1...ik; the last letter acts first."""
    word = _check_word(rs, word)
    if f.homogeneous_degree() is None:
        raise ValueError("divided differences are applied to homogeneous polynomials")
    op = delta_reference if reference else delta
    for i in reversed(word):
        if f.is_zero():
            break
        f = op(rs, i, f)
    return f


# ---------------------------------------------------------------------------
# expansions

def _word_str(word: Sequence[int]) -> str:
    return "".join(str(i) for i in word)


def _word_order(w: str):
    return (len(w), w)


@dataclass
class RationalExpansion:
    """sum coeffs[w] Z_w with rational coefficients, words canonical."""

    kind: str
    degree: int
    coeffs: dict = field(default_factory=dict)
    label: str = ""

    def __post_init__(self):
        self.coeffs = {w: Fraction(c) for w, c in self.coeffs.items() if c}
        for w in self.coeffs:
            if len(w) != self.degree:
                raise ValueError(f"word {w} does not have length {self.degree}")

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def words(self) -> list:
        return sorted(self.coeffs, key=_word_order)

    def content(self) -> Fraction:
        """Positive gcd of the coefficients (rational); 0 for the zero expansion."""
        from math import gcd
        num = 0
        den = 1
        for c in self.coeffs.values():
            den = den * c.denominator // gcd(den, c.denominator)
        for c in self.coeffs.values():
            num = gcd(num, int(c * den))
        return Fraction(num, den)

    def scaled(self, s) -> "RationalExpansion":
        return RationalExpansion(self.kind, self.degree,
                                 {w: c * s for w, c in self.coeffs.items()}, self.label)

    def as_integral(self) -> "SchubertExpansion":
        if not self.is_integral():
            raise ValueError("expansion has non-integral coefficients")
        return SchubertExpansion(self.kind, self.degree,
                                 {w: int(c) for w, c in self.coeffs.items()}, self.label)

    def to_json(self) -> dict:
        return {
            "input": self.label,
            "degree": self.degree,
            "terms": [{"word": w, "coeff": str(self.coeffs[w])} for w in self.words()],
        }

    def __eq__(self, other):
        if not isinstance(other, RationalExpansion):
            return NotImplemented
        return self.kind == other.kind and self.degree == other.degree and self.coeffs == other.coeffs

    def format(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for w in self.words():
            c = self.coeffs[w]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            coef = "" if a == 1 else f"{a}*"
            parts.append(f"{sign} {coef}Z{w}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


class SchubertExpansion(RationalExpansion):
    """Integral expansion."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_integral():
            raise ValueError("SchubertExpansion needs integer coefficients")
        self.coeffs = {w: int(c) for w, c in self.coeffs.items()}


def expansion_from_words(rs: RootSystem, degree: int, coeffs: Mapping[str, int],
                         label: str = "") -> RationalExpansion:
    """Build an expansion from possibly non-canonical reduced words."""
    out: dict = {}
    for w, c in coeffs.items():
        if len(w) != degree:
            raise ValueError(f"word {w} does not have length {degree}")
        if length(rs, w) != len(w):
            raise ValueError(f"word {w} is not reduced")
        cw = canonicalize(rs, w).word_string
        out[cw] = out.get(cw, 0) + Fraction(c)
    return RationalExpansion(rs.kind, degree, out, label)


def _check_cap(rs: RootSystem, degree: int, caps: Mapping[str, int] | None, what: str):
    cap = (caps or DEFAULT_CAPS).get(rs.kind)
    if cap is not None and degree > cap:
        raise CapExceeded(rs.kind, degree, cap, what)


def bgg_expand(rs: RootSystem, f: Polynomial, label: str = "", caps: Mapping[str, int] | None = None,
               check_collisions: bool = False, progress=None) -> RationalExpansion:
    """Schubert expansion of a homogeneous weight polynomial.

    The frontier maps w(rho) to Delta_w(f) with the integer numerator of f;
    elements whose polynomial vanishes are dropped.  An element reached twice
    in one stage gets the same polynomial from both paths (Delta_w does not
    depend on the reduced word), so the second computation is skipped unless
    ``check_collisions`` asks to verify that.
    """
    if f.nvars != rs.rank:
        raise ValueError("polynomial is not in the weight ring of this root system")
    k = f.homogeneous_degree()
    if k is None:
        raise ValueError("bgg_expand needs a homogeneous polynomial")
    if f.is_zero():
        return RationalExpansion(rs.kind, max(k, 0), {}, label)
    _check_cap(rs, k, caps, "Schubert expansion")
    n = rs.rank
    frontier = {(1,) * n: f.numerators}
    for step in range(k):
        new: dict = {}
        dead: set = set()
        for u in sorted(frontier):
            g = frontier[u]
            for i in range(1, n + 1):
                if u[i - 1] <= 0:
                    continue
                nu = rs.reflect_vector(i, u)
                if nu in dead:
                    continue
                if nu in new and not check_collisions:
                    continue
                h = _delta_ints(rs, i, g)
                if nu in new:
                    if new[nu] != h:
                        raise VerificationError("divided difference depends on the reduced word")
                    continue
                if h:
                    new[nu] = h
                else:
                    dead.add(nu)
        frontier = new
        if progress is not None:
            progress(step + 1, len(frontier))
        log.debug("stage %d: %d live elements", step + 1, len(frontier))
        if not frontier:
            break
    coeffs = {}
    zero = (0,) * n
    for u, g in frontier.items():
        c = g.get(zero, 0)
        if c:
            coeffs[_word_str(word_from_point(rs, u))] = Fraction(c, f.denominator)
    return RationalExpansion(rs.kind, k, coeffs, label)


def parabolic_support_ok(rs: RootSystem, expansion: RationalExpansion,
                         parabolic: ParabolicSpec) -> bool:
    """True when every word in the support is a minimal coset representative."""
    from .rootweyl import is_minimal_coset_rep
    return all(is_minimal_coset_rep(rs, w, parabolic) for w in expansion.coeffs)


# ---------------------------------------------------------------------------
# kernel test

def kernel_test(rs: RootSystem, f: Polynomial, method: str = "bgg", ring: GradedRing | None = None,
                caps: Mapping[str, int] | None = None) -> bool:
    """Decide whether f lies in the kernel of the characteristic map over Q.

    ``f`` lives in the weight ring, or in the ring of t and the c_i when
    ``ring`` is given.  Method ``bgg`` expands and checks for zero; method
    ``groebner`` reduces modulo the ideal of positive degree invariants,
    which requires the tc form (weight polynomials are converted first).
    """
    from .coords import tc_to_weights, weights_to_tc
    if f.is_zero():
        return True
    deg_ring = ring.degrees if ring is not None else None
    d = f.homogeneous_degree(deg_ring)
    if d is None:
        raise ValueError("kernel_test needs a homogeneous polynomial")
    if d == 0:
        return False
    _check_cap(rs, d, caps, "kernel test")
    if method == "bgg":
        if ring is not None:
            f = tc_to_weights(rs, f, ring)
        return bgg_expand(rs, f, caps=caps).is_zero()
    if method == "groebner":
        from .invariants import invariant_ideal
        if ring is None:
            f = weights_to_tc(rs, f)
        elif ring.names != invariant_ideal(rs.kind, d).ring.names:
            raise ValueError("groebner kernel test works in the ring of t and the c_i")
        return invariant_ideal(rs.kind, d).contains(f)
    raise ValueError(f"unknown kernel test method {method!r}")


# ---------------------------------------------------------------------------
# generator dictionaries

@dataclass
class CheckResult:
    name: str
    passed: bool
    expected: str = ""
    computed: str = ""
    note: str = ""
    gated: bool = True

    def to_json(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if not self.gated:
            d["gated"] = False
        if self.expected:
            d["expected"] = self.expected
        if self.computed:
            d["computed"] = self.computed
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.gated)

    def add(self, check: CheckResult) -> None:
        self.checks.append(check)

    def failures(self) -> list:
        return [c for c in self.checks if c.gated and not c.passed]

    def to_json(self) -> dict:
        return {"title": self.title, "passed": self.passed,
                "checks": [c.to_json() for c in self.checks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def representative_env(kind: str):
    """Ring of t, c_i and the gamma_i, with the gamma_i and delta_i as rational
    polynomials in t and the c_i (the 'printed' representatives)."""
    from . import data
    from .coords import tc_env, tc_ring
    tc = tc_ring(kind)
    env = tc_env(kind, tc)
    gam = {}
    for name, m, expr in data.GAMMA_MULTIPLES[kind]:
        gam[name] = tc.parse(expr, env) / m
    deltas = {name: tc.parse(expr, env) for name, expr in data.DELTAS[kind]}
    return tc, env, gam, deltas


def verify_generator_dictionary(kind: str, caps: Mapping[str, int] | None = None,
                                include=None, progress=None) -> Report:
    """Forward and inverse dictionary checks for one group.

    Forward: the expansion of the integral class m * gamma_i has integer
    content m and, divided by it, equals the stated combination.  Inverse:
    each listed representative expands to the single class Z_w.
    ``include`` optionally restricts the checks to the given names.
    """
    from . import data
    from .coords import tc_to_weights
    rs = root_system(kind)
    tc, env, gam, deltas = representative_env(kind)
    report = Report(f"generator dictionary {kind}")

    def wanted(name):
        return include is None or name in include

    for name, m, expr in data.GAMMA_MULTIPLES[kind]:
        if not wanted(name):
            continue
        integral = tc.parse(expr, env)
        d = tc.degree_of(integral)
        exp = bgg_expand(rs, tc_to_weights(rs, integral, tc), label=f"{m}*{name}", caps=caps,
                         progress=progress)
        content = exp.content()
        computed = f"content {content}; {exp.scaled(1 / content if content else 1).format()}"
        words = data.GAMMA_EXPANSIONS[kind][name]
        try:
            stated = expansion_from_words(rs, d, words)
        except ValueError as err:
            stated, note = None, f"stated expansion is malformed: {err}"
        else:
            note = ""
        ok = stated is not None and content == m and exp.scaled(Fraction(1, m)) == stated
        fix = data.GAMMA_EXPANSIONS_CORRECTED.get(kind, {}).get(name)
        if not ok and fix is not None:
            fixed = expansion_from_words(rs, d, fix)
            agrees = content == m and exp.scaled(Fraction(1, m)) == fixed
            note = f"{note}; the corrected expansion {fixed.format()} agrees: {agrees}".lstrip("; ")
        expected = stated.format() if stated is not None else \
            " + ".join(f"{c}*Z{w}" for w, c in words.items())
        report.add(CheckResult(f"forward {name}", ok, expected=f"content {m}; {expected}",
                               computed=computed, note=note))

    # The printed delta_i may carry a rational prefactor, in which case
    # delta_i / m is not gamma_i.  Record the actual ratio without gating.
    multiples = {name: m for name, m, _ in data.GAMMA_MULTIPLES[kind]}
    for dname, dpoly in deltas.items():
        gname = "g" + dname[1:]
        if not wanted(dname) or gname not in gam:
            continue
        ratio = delta_ratio(dpoly, gam[gname])
        m = multiples[gname]
        report.add(CheckResult(
            f"{dname} = {m}*{gname}", ratio == m, expected=f"{dname} = {m}*{gname}",
            computed=f"{dname} = {ratio}*{gname}" if ratio is not None else "not proportional",
            gated=False))

    gamma_env = dict(env)
    gamma_env.update(gam)
    delta_env = dict(env)
    delta_env.update(deltas)
    for word, expr in data.INVERSE_DELTA_FORMS[kind]:
        if not wanted("f" + word):
            continue
        f = tc.parse(expr, delta_env)
        report.add(_single_class_check(rs, tc, f, word, f"inverse f{word}", caps))
    for word, expr in data.INVERSE_GAMMA_FORMS[kind]:
        if not wanted("Z" + word):
            continue
        f = tc.parse(expr, gamma_env)
        report.add(_single_class_check(rs, tc, f, word, f"inverse Z{word}", caps))
    return report


def delta_ratio(f, g) -> Fraction | None:
    """The rational r with f = r*g, or None if there is none."""
    if g.is_zero():
        return None
    e, c = g.terms()[0]
    r = f.coefficient(e) / c
    return r if f == g * r else None


def _single_class_check(rs, tc, f, word, name, caps) -> CheckResult:
    from .coords import tc_to_weights
    exp = bgg_expand(rs, tc_to_weights(rs, f, tc), label=name, caps=caps)
    target = expansion_from_words(rs, len(word), {word: 1})
    return CheckResult(name, exp == target, expected=target.format(), computed=exp.format())


def expand_expression(kind: str, expr: str, caps: Mapping[str, int] | None = None,
                      check_collisions: bool = False) -> RationalExpansion:
    """Parse an expression in t, c_i, gamma_i, delta_i or w1..wl and expand it."""
    from .coords import tc_to_weights
    rs = root_system(kind)
    tc, env, gam, deltas = representative_env(kind)
    names = set(_names_in(expr))
    weight_names = {f"w{i}" for i in range(1, rs.rank + 1)}
    if names & weight_names:
        scope = {f"w{i}": rs.weight(i) for i in range(1, rs.rank + 1)}
        scope["t"] = rs.t_form(0)
        for i in range(1, rs.rank + 1):
            scope[f"c{i}"] = rs.c(i)
            scope[f"t{i}"] = rs.t_form(i)
        from .polycore import parse_expression
        f = parse_expression(expr, scope, rs.rank)
    else:
        scope = dict(env)
        scope.update(gam)
        scope.update(deltas)
        f = tc_to_weights(rs, tc.parse(expr, scope), tc)
    return bgg_expand(rs, f, label=expr, caps=caps, check_collisions=check_collisions)


def _names_in(expr: str) -> Iterable[str]:
    import re
    return re.findall(r"[A-Za-z_][A-Za-z_0-9]*", expr)

