"""Ideal membership in weighted graded polynomial rings over Q.

For a homogeneous ideal J = (g_1, ..., g_r) the degree-d piece J_d is spanned
by the products m * g_j with m a monomial of degree d - deg g_j.  Row reducing
that Macaulay matrix with columns in descending grevlex order gives a basis
of J_d whose leading monomials are exactly the leading monomials of J in
degree d, i.e. the degree-d slice of a Groebner basis.  Reduction against it
yields the grevlex normal form, so membership is decided exactly and the
answer agrees with a full Groebner computation in every degree.

Elimination is fraction free: rows are primitive integer vectors.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from .polycore import GradedRing, Polynomial


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {k: v // g for k, v in row.items()}
    return row


class TruncatedGroebner:
    """Echelonized slices of a homogeneous ideal, built lazily per degree."""

    def __init__(self, ring: GradedRing, generators: Iterable[Polynomial]):
        self.ring = ring
        gens = []
        for g in generators:
            if g.is_zero():
                continue
            d = ring.degree_of(g)
            if d is None:
                raise ValueError("ideal generators must be homogeneous")
            gens.append((d, g))
        self.generators = gens
        self._slices: dict = {}

    def _columns(self, d: int):
        monos = self.ring.monomials(d)
        return monos, {m: i for i, m in enumerate(monos)}

    def _slice(self, d: int):
        if d in self._slices:
            return self._slices[d]
        monos, index = self._columns(d)
        pivots: dict = {}
        n = self.ring.nvars
        for gd, g in self.generators:
            if gd > d:
                continue
            for m in self.ring.monomials(d - gd):
                row = {}
                for e, v in g.numerators.items():
                    row[index[tuple(a + b for a, b in zip(e, m))]] = v
                row = self._reduce_row(row, pivots)
                if row:
                    pivots[min(row)] = row
        self._slices[d] = (monos, index, pivots)
        return self._slices[d]

    @staticmethod
    def _reduce_row(row: dict, pivots: dict, full: bool = False) -> dict:
        """Reduce until the leading column (or, with ``full``, every column)
        avoids the pivot columns.  The result is a nonzero multiple of the
        true remainder, made primitive."""
        done = set()
        while row:
            cols = [c for c in row if c in pivots and c not in done] if full else None
            if full:
                if not cols:
                    break
                c = min(cols)
            else:
                c = min(row)
                if c not in pivots:
                    break
            p = pivots[c]
            a, b = p[c], row[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in row.items()}
            for k, v in p.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
        return row

    def dimension(self, d: int) -> int:
        """dim_Q of the ideal in degree d."""
        return len(self._slice(d)[2])

    def quotient_dimension(self, d: int) -> int:
        return len(self.ring.monomials(d)) - self.dimension(d)

    def leading_monomials(self, d: int) -> list:
        monos, _, pivots = self._slice(d)
        return [monos[c] for c in sorted(pivots)]

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of a homogeneous f modulo the ideal (exact, rational)."""
        if f.is_zero():
            return f
        d = self.ring.degree_of(f)
        if d is None:
            return sum((self.reduce(f.homogeneous_part(k, self.ring.degrees))
                        for k in sorted({sum(w * x for w, x in zip(self.ring.degrees, e))
                                         for e in f.numerators})), self.ring.zero())
        monos, index, pivots = self._slice(d)
        row = {index[e]: v for e, v in f.numerators.items()}
        scale = 1
        # track the scalar so that the remainder is exact, not a multiple
        done = False
        while not done:
            done = True
            for c in sorted(row):
                if c in pivots:
                    p = pivots[c]
                    a, b = p[c], row[c]
                    g = gcd(a, b)
                    a, b = a // g, b // g
                    scale *= a
                    new = {k: a * v for k, v in row.items()}
                    for k, v in p.items():
                        nv = new.get(k, 0) - b * v
                        if nv:
                            new[k] = nv
                        else:
                            new.pop(k, None)
                    row = new
                    done = False
                    break
        return Polynomial.from_ints(self.ring.nvars, {monos[c]: v for c, v in row.items()},
                                    f.denominator * scale)

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        d = self.ring.degree_of(f)
        if d is None:
            return all(self.contains(f.homogeneous_part(k, self.ring.degrees))
                       for k in {sum(w * x for w, x in zip(self.ring.degrees, e))
                                 for e in f.numerators})
        monos, index, pivots = self._slice(d)
        row = {index[e]: v for e, v in f.numerators.items()}
        return not self._reduce_row(_primitive(row), pivots, full=True)


def ideal_contains(ring: GradedRing, generators: Sequence[Polynomial], f: Polynomial) -> bool:
    return TruncatedGroebner(ring, generators).contains(f)
