"""Exact multivariate polynomials over Q.

A :class:`Polynomial` is stored as a dictionary of integer numerators keyed by
exponent tuples together with one positive common denominator.  The pair is
kept normalized (the gcd of the denominator and all numerators is 1), so two
equal polynomials always have identical internal data and hash alike.

Coefficients are exposed as :class:`fractions.Fraction`.  Terms are listed in
graded reverse lexicographic order (highest term first), optionally with a
weight vector for graded rings whose generators have different degrees.
"""
from __future__ import annotations

import ast
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Exponents = tuple  # tuple[int, ...]


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class RankMismatch(ValueError):
    """Raised when polynomials over different numbers of variables meet."""


class MissingImage(KeyError):
    """Raised by :func:`substitute` when a variable of f has no image."""


# ---------------------------------------------------------------------------
# raw integer-dictionary kernels (shared with the divided difference code)

def dict_add(a: dict, b: dict, scale: int = 1) -> dict:
    """Return a + scale*b for integer dictionaries, dropping zeros."""
    r = dict(a)
    for k, v in b.items():
        n = r.get(k, 0) + scale * v
        if n:
            r[k] = n
        else:
            r.pop(k, None)
    return r


def dict_add_into(acc: dict, b: dict, scale: int = 1) -> None:
    for k, v in b.items():
        n = acc.get(k, 0) + scale * v
        if n:
            acc[k] = n
        else:
            del acc[k]


def dict_mul(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    r: dict = {}
    get = r.get
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = tuple([x + y for x, y in zip(k1, k2)])
            r[k] = get(k, 0) + v1 * v2
    return {k: v for k, v in r.items() if v}


def dict_content(a: dict) -> int:
    g = 0
    for v in a.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def grevlex_key(e: Sequence[int], weights: Sequence[int] | None = None):
    """Sort key; larger key means larger monomial in (weighted) grevlex."""
    if weights is None:
        deg = sum(e)
    else:
        deg = sum(w * x for w, x in zip(weights, e))
    return (deg, tuple(-x for x in reversed(e)))


# ---------------------------------------------------------------------------

class Polynomial:
    """Polynomial in ``nvars`` commuting variables with rational coefficients."""

    __slots__ = ("nvars", "_num", "_den", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponents, Rational] | None = None):
        self.nvars = nvars
        num: dict = {}
        den = 1
        if terms:
            fr = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise RankMismatch(f"exponent {e} does not have length {nvars}")
                c = Fraction(c)
                if c:
                    fr[e] = fr.get(e, 0) + c
            for c in fr.values():
                den = den * c.denominator // gcd(den, c.denominator)
            for e, c in fr.items():
                if c:
                    num[e] = int(c * den)
        self._num, self._den = _normalize(num, den)
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_ints(cls, nvars: int, num: dict, den: int = 1) -> "Polynomial":
        """Wrap an integer dictionary (not copied) with a common denominator."""
        p = cls.__new__(cls)
        p.nvars = nvars
        if den < 0:
            num = {k: -v for k, v in num.items()}
            den = -den
        p._num, p._den = _normalize({k: v for k, v in num.items() if v}, den)
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls.from_ints(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: Rational) -> "Polynomial":
        c = Fraction(c)
        return cls.from_ints(nvars, {(0,) * nvars: c.numerator}, c.denominator)

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return cls.from_ints(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence[Rational]) -> "Polynomial":
        """The linear form sum(coeffs[i] * x_i)."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(n, terms)

    # -- accessors ----------------------------------------------------------
    @property
    def numerators(self) -> dict:
        """Integer numerator dictionary (do not mutate)."""
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def terms(self, weights: Sequence[int] | None = None) -> list:
        """List of (exponents, Fraction) in descending (weighted) grevlex order."""
        keys = sorted(self._num, key=lambda e: grevlex_key(e, weights), reverse=True)
        return [(e, Fraction(self._num[e], self._den)) for e in keys]

    def coefficient(self, e: Exponents) -> Fraction:
        return Fraction(self._num.get(tuple(e), 0), self._den)

    def __len__(self) -> int:
        return len(self._num)

    def __bool__(self) -> bool:
        return bool(self._num)

    def is_zero(self) -> bool:
        return not self._num

    def degree(self, weights: Sequence[int] | None = None) -> int:
        """Maximal (weighted) degree of a term; -1 for the zero polynomial."""
        if not self._num:
            return -1
        if weights is None:
            return max(sum(e) for e in self._num)
        return max(sum(w * x for w, x in zip(weights, e)) for e in self._num)

    def homogeneous_degree(self, weights: Sequence[int] | None = None) -> int | None:
        """Common (weighted) degree of all terms, or None if inhomogeneous.

        The zero polynomial is homogeneous of every degree; -1 is returned.
        """
        if not self._num:
            return -1
        if weights is None:
            degs = {sum(e) for e in self._num}
        else:
            degs = {sum(w * x for w, x in zip(weights, e)) for e in self._num}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        return self.homogeneous_degree(weights) is not None

    def variables_used(self) -> set:
        used = set()
        for e in self._num:
            used.update(i for i, x in enumerate(e) if x)
        return used

    def is_integral(self) -> bool:
        return self._den == 1

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if other.nvars != self.nvars:
            raise RankMismatch(f"{self.nvars} variables vs {other.nvars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self._den * other._den // gcd(self._den, other._den)
        a = _scaled(self._num, d // self._den)
        dict_add_into(a, other._num, d // other._den)
        return Polynomial.from_ints(self.nvars, a, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial.from_ints(self.nvars, {k: -v for k, v in self._num.items()}, self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Polynomial.from_ints(
                self.nvars, _scaled(self._num, c.numerator), self._den * c.denominator)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial.from_ints(
            self.nvars, dict_mul(self._num, other._num), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._den == other._den and self._num == other._num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self._den, frozenset(self._num.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.nvars}, {format_polynomial(self)})"

    # -- conveniences -------------------------------------------------------
    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial(self.nvars, {e: fn(c) for e, c in self.terms()})

    def homogeneous_part(self, d: int, weights: Sequence[int] | None = None) -> "Polynomial":
        w = weights or (1,) * self.nvars
        keep = {e: v for e, v in self._num.items() if sum(a * b for a, b in zip(w, e)) == d}
        return Polynomial.from_ints(self.nvars, keep, self._den)

    def embed(self, nvars: int, positions: Sequence[int]) -> "Polynomial":
        """Re-index variables: variable i of self becomes positions[i] of the result."""
        num = {}
        for e, v in self._num.items():
            ne = [0] * nvars
            for i, x in enumerate(e):
                if x:
                    ne[positions[i]] += x
            num[tuple(ne)] = v
        return Polynomial.from_ints(nvars, num, self._den)

    def to_json(self) -> list:
        return to_json(self)


def _scaled(num: dict, s: int) -> dict:
    if s == 1:
        return dict(num)
    return {k: v * s for k, v in num.items()}


def _normalize(num: dict, den: int):
    if not num:
        return {}, 1
    g = gcd(den, dict_content(num))
    if g != 1:
        num = {k: v // g for k, v in num.items()}
        den //= g
    return num, den


# ---------------------------------------------------------------------------
# module-level operations

def arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    """Apply ``op`` in {'add', 'sub', 'mul'} to two polynomials of equal rank."""
    if not isinstance(f, Polynomial) or not isinstance(g, Polynomial):
        raise TypeError("arith expects two polynomials")
    f._check(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def substitute(f: Polynomial, images: Mapping[int, Polynomial], nvars: int | None = None) -> Polynomial:
    """Ring map sending variable i of f to ``images[i]``.

    All images must share one number of variables (``nvars`` when no image is
    given, e.g. for a constant f).  Monomial images whose value is a single
    term are applied by exponent arithmetic; the remaining variables are
    expanded once per distinct exponent pattern.
    """
    used = f.variables_used()
    missing = sorted(used - set(images))
    if missing:
        raise MissingImage(f"no image for variable(s) {missing}")
    target = {im.nvars for im in images.values()}
    if nvars is not None:
        target.add(nvars)
    if len(target) > 1:
        raise RankMismatch(f"images live in different rings: {sorted(target)}")
    n = target.pop() if target else 0
    if not used:
        return Polynomial.from_ints(n, {(0,) * n: v for v in f._num.values()}, f._den)

    simple = {}   # var -> (exponent vector, numerator, denominator)
    complex_vars = []
    for i in sorted(used):
        im = images[i]
        if len(im._num) <= 1:
            if im._num:
                (e, v), = im._num.items()
                simple[i] = (e, v, im._den)
            else:
                simple[i] = None
        else:
            complex_vars.append(i)

    powers: dict = {}

    def power(i, k):
        key = (i, k)
        if key not in powers:
            if k == 0:
                powers[key] = ({(0,) * n: 1}, 1)
            elif k == 1:
                powers[key] = (images[i]._num, images[i]._den)
            else:
                a, da = power(i, k // 2)
                b, db = power(i, k - k // 2)
                powers[key] = (dict_mul(a, b), da * db)
        return powers[key]

    prefix_memo: dict = {}

    def expand(cexp):
        # cexp: tuple of exponents aligned with complex_vars
        if cexp in prefix_memo:
            return prefix_memo[cexp]
        if not cexp:
            val = ({(0,) * n: 1}, 1)
        else:
            head, dh = expand(cexp[:-1])
            p, dp = power(complex_vars[len(cexp) - 1], cexp[-1])
            val = (dict_mul(head, p), dh * dp)
        prefix_memo[cexp] = val
        return val

    # group terms by their complex part so each expansion is used once
    groups: dict = {}
    for e, v in f._num.items():
        coeff_num, coeff_den = v, f._den
        shift = [0] * n
        dead = False
        for i, (e_s) in simple.items():
            k = e[i]
            if not k:
                continue
            if e_s is None:
                dead = True
                break
            ie, iv, idn = e_s
            coeff_num *= iv ** k
            coeff_den *= idn ** k
            for j, x in enumerate(ie):
                if x:
                    shift[j] += x * k
        if dead:
            continue
        cexp = tuple(e[i] for i in complex_vars)
        groups.setdefault(cexp, []).append((tuple(shift), Fraction(coeff_num, coeff_den)))

    total: dict = {}
    total_den = 1
    pending = []
    for cexp, items in groups.items():
        body, dbody = expand(cexp)
        for shift, c in items:
            pending.append((body, dbody * c.denominator, c.numerator, shift))
            total_den = total_den * (dbody * c.denominator) // gcd(total_den, dbody * c.denominator)
    for body, dd, cn, shift in pending:
        s = cn * (total_den // dd)
        if any(shift):
            for k, v in body.items():
                kk = tuple([a + b for a, b in zip(k, shift)])
                nv = total.get(kk, 0) + s * v
                if nv:
                    total[kk] = nv
                else:
                    total.pop(kk, None)
        else:
            dict_add_into(total, body, s)
    return Polynomial.from_ints(n, total, total_den)


def divide_exact_by_linear(f: Polynomial, alpha: Polynomial) -> Polynomial:
    """Exact quotient f / alpha for a nonzero homogeneous linear form alpha.

    Raises :class:`NotDivisible` when alpha does not divide f.
    """
    f._check(alpha)
    if alpha.homogeneous_degree() != 1:
        raise ValueError("divisor must be a nonzero linear form")
    n = f.nvars
    coeffs = {}
    for e, v in alpha._num.items():
        coeffs[e.index(1)] = Fraction(v, alpha._den)
    # pivot on a variable with unit coefficient when possible
    j = min(coeffs, key=lambda i: (abs(coeffs[i]) != 1, i))
    a = coeffs[j]
    beta = {}
    for i, c in coeffs.items():
        if i != j:
            e = [0] * n
            e[i] = 1
            beta[tuple(e)] = c
    beta = Polynomial(n, beta)

    slices: dict = {}
    for e, v in f._num.items():
        k = e[j]
        rest = e[:j] + (0,) + e[j + 1:]
        slices.setdefault(k, {})[rest] = v
    if not slices:
        return Polynomial.zero(n)
    top = max(slices)
    fk = {k: Polynomial.from_ints(n, d, f._den) for k, d in slices.items()}
    zero = Polynomial.zero(n)
    q = {}
    prev = zero
    inv_a = 1 / a
    for k in range(top, 0, -1):
        prev = (fk.get(k, zero) - beta * prev) * inv_a
        q[k - 1] = prev
    if fk.get(0, zero) != beta * q.get(0, zero):
        raise NotDivisible("linear form does not divide the polynomial")
    num: dict = {}
    den = 1
    for k, qk in q.items():
        den = den * qk._den // gcd(den, qk._den)
    for k, qk in q.items():
        s = den // qk._den
        for e, v in qk._num.items():
            ee = e[:j] + (e[j] + k,) + e[j + 1:]
            num[ee] = num.get(ee, 0) + v * s
    return Polynomial.from_ints(n, num, den)


def integer_content(f: Polynomial):
    """Return (c, g) with f = c*g, c > 0 rational and g primitive integral."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no content")
    g = dict_content(f._num)
    g = abs(g)
    return Fraction(g, f._den), Polynomial.from_ints(f.nvars, {k: v // g for k, v in f._num.items()})


def to_json(f: Polynomial) -> list:
    """Serialize as a list of terms in canonical order with decimal strings."""
    out = []
    for e, c in f.terms():
        out.append({"e": list(e), "n": str(c.numerator), "d": str(c.denominator)})
    return out


def from_json(nvars: int, data: Iterable[Mapping]) -> Polynomial:
    terms = {}
    for t in data:
        terms[tuple(t["e"])] = Fraction(int(t["n"]), int(t["d"]))
    return Polynomial(nvars, terms)


def format_polynomial(f: Polynomial, names: Sequence[str] | None = None,
                      weights: Sequence[int] | None = None) -> str:
    if f.is_zero():
        return "0"
    if names is None:
        names = [f"x{i + 1}" for i in range(f.nvars)]
    parts = []
    for e, c in f.terms(weights):
        mono = "*".join(
            names[i] if x == 1 else f"{names[i]}^{x}" for i, x in enumerate(e) if x)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


# ---------------------------------------------------------------------------
# named graded rings

class ParseError(ValueError):
    """Raised for expressions outside the accepted polynomial grammar."""


@dataclass(frozen=True)
class GradedRing:
    """A free commutative ring on named generators with positive degrees."""

    names: tuple
    degrees: tuple
    _index: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator name")
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "degrees", tuple(self.degrees))
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    def gen(self, name: str) -> Polynomial:
        return Polynomial.variable(self.nvars, self._index[name])

    def gens(self) -> dict:
        return {n: self.gen(n) for n in self.names}

    def one(self) -> Polynomial:
        return Polynomial.constant(self.nvars, 1)

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.nvars)

    def degree_of(self, f: Polynomial) -> int | None:
        return f.homogeneous_degree(self.degrees)

    def parse(self, expr: str, env: Mapping[str, Polynomial] | None = None) -> Polynomial:
        """Parse ``expr`` built from generators, names in ``env``, integers and + - * / ^."""
        scope = dict(self.gens())
        if env:
            scope.update(env)
        return parse_expression(expr, scope, self.nvars)

    def format(self, f: Polynomial) -> str:
        return format_polynomial(f, self.names, self.degrees)

    def monomials(self, d: int) -> list:
        """Exponent tuples of weighted degree d, in descending grevlex order."""
        return list(_weighted_monomials(self.degrees, d))

    def extend(self, names: Sequence[str], degrees: Sequence[int]) -> "GradedRing":
        return GradedRing(self.names + tuple(names), self.degrees + tuple(degrees))

    def include(self, f: Polynomial, other: "GradedRing") -> Polynomial:
        """Image of f (in ``other``) under the inclusion by generator name."""
        return f.embed(self.nvars, [self._index[n] for n in other.names])


@lru_cache(maxsize=None)
def _weighted_monomials(degrees: tuple, d: int) -> tuple:
    n = len(degrees)
    out = []

    def rec(i, left, acc):
        if i == n:
            if left == 0:
                out.append(tuple(acc))
            return
        w = degrees[i]
        for k in range(left // w + 1):
            acc.append(k)
            rec(i + 1, left - k * w, acc)
            acc.pop()

    if d >= 0:
        rec(0, d, [])
    out.sort(key=lambda e: grevlex_key(e, degrees), reverse=True)
    return tuple(out)


def parse_expression(expr: str, scope: Mapping[str, Polynomial], nvars: int) -> Polynomial:
    """Evaluate an arithmetic expression over polynomials without ``eval``."""
    try:
        tree = ast.parse(expr.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {expr!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id not in scope:
                raise ParseError(f"unknown name {node.id!r} in {expr!r}")
            return scope[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if isinstance(b, Polynomial):
                    raise ParseError("division by a polynomial is not supported")
                return a / b
            if isinstance(node.op, ast.Pow):
                if not isinstance(b, Fraction) or b.denominator != 1 or b < 0:
                    raise ParseError("exponents must be non-negative integers")
                return a ** int(b)
        raise ParseError(f"unsupported syntax in {expr!r}")

    v = ev(tree)
    if isinstance(v, Fraction):
        return Polynomial.constant(nvars, v)
    return v
