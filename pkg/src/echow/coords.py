"""The graded ring Q[t, c_2, ..., c_l] and its image in the weight ring.

The classes t_1, ..., t_l are permuted by the Levi subgroup W_P of the
parabolic attached to node 2, so their elementary symmetric functions c_i and
t = w_2 generate its invariants.  With c_1 = 3t, the ring of W_P-invariants
is the free graded ring on t (degree 1) and c_2, ..., c_l (degree i).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .polycore import GradedRing, Polynomial, dict_add_into, dict_mul
from .rootweyl import RootSystem, root_system


@lru_cache(maxsize=None)
def tc_ring(kind: str) -> GradedRing:
    rank = root_system(kind).rank
    return GradedRing(("t",) + tuple(f"c{i}" for i in range(2, rank + 1)),
                      (1,) + tuple(range(2, rank + 1)))


def tc_env(kind: str, ring: GradedRing | None = None) -> dict:
    """Parser environment: c1 is the alias 3t."""
    ring = ring or tc_ring(kind)
    return {"c1": 3 * ring.gen("t")}


class WeightEvaluator:
    """Evaluates polynomials in t, the c_i (and u = t_8 for E8) in the weight
    ring, memoizing monomials.  A variable without an image raises ValueError."""

    def __init__(self, rs: RootSystem, ring: GradedRing):
        self.rs = rs
        self.ring = ring
        self._images = {}
        for idx, name in enumerate(ring.names):
            if name == "t":
                self._images[idx] = rs.t_form(0).numerators
            elif name.startswith("c") and name[1:].isdigit():
                self._images[idx] = rs.c(int(name[1:])).numerators
            elif name == "u" and rs.rank == 8:
                self._images[idx] = rs.t_form(8).numerators
        self._memo = {}
        self._t_idx = ring.index("t")

    def _monomial(self, e):
        if e in self._memo:
            return self._memo[e]
        n = self.rs.rank
        nz = [i for i, x in enumerate(e) if x]
        if not nz:
            val = {(0,) * n: 1}
        else:
            # peel t first, so that the last multiplication is by t = w_2,
            # a single monomial; t-free monomials are shared across powers of t
            i = self._t_idx if e[self._t_idx] else nz[-1]
            if i not in self._images:
                raise ValueError(f"variable {self.ring.names[i]} has no weight image")
            rest = list(e)
            rest[i] -= 1
            val = dict_mul(self._monomial(tuple(rest)), self._images[i])
        self._memo[e] = val
        return val

    def __call__(self, f: Polynomial) -> Polynomial:
        total: dict = {}
        for e, v in f.numerators.items():
            dict_add_into(total, self._monomial(e), v)
        return Polynomial.from_ints(self.rs.rank, total, f.denominator)


_EVALUATORS: dict = {}


def tc_to_weights(rs: RootSystem, f: Polynomial, ring: GradedRing | None = None) -> Polynomial:
    ring = ring or tc_ring(rs.kind)
    key = (rs.kind, ring.names)
    ev = _EVALUATORS.get(key)
    if ev is None:
        ev = _EVALUATORS[key] = WeightEvaluator(rs, ring)
    return ev(f)


def weights_to_tc(rs: RootSystem, f: Polynomial) -> Polynomial:
    """Rewrite a W_P-invariant weight polynomial in t and the c_i.

    Solves a linear system degree by degree and verifies the answer exactly;
    raises ValueError when f is not in the image.
    """
    ring = tc_ring(rs.kind)
    result = ring.zero()
    n = rs.rank
    by_degree: dict = {}
    for e, v in f.numerators.items():
        by_degree.setdefault(sum(e), {})[e] = v
    for d, part in sorted(by_degree.items()):
        target = Polynomial.from_ints(n, part, f.denominator)
        monos = ring.monomials(d)
        images = [tc_to_weights(rs, Polynomial.from_ints(ring.nvars, {m: 1}), ring) for m in monos]
        sol = _solve_in_span(images, target)
        if sol is None:
            raise ValueError("polynomial is not invariant under the Levi subgroup")
        result = result + Polynomial(ring.nvars, {m: c for m, c in zip(monos, sol) if c})
    if tc_to_weights(rs, result) != f:
        raise ValueError("conversion failed verification")
    return result


def _solve_in_span(vectors, target):
    """Coefficients x with sum x_i vectors_i = target, or None (exact)."""
    cols = {}
    for v in vectors + [target]:
        for e in v.numerators:
            cols.setdefault(e, len(cols))
    m = len(vectors)
    rows = {}
    for k, v in enumerate(vectors):
        for e, c in v.numerators.items():
            rows.setdefault(cols[e], [Fraction(0)] * (m + 1))[k] = Fraction(c, v.denominator)
    for e, c in target.numerators.items():
        rows.setdefault(cols[e], [Fraction(0)] * (m + 1))[m] = Fraction(c, target.denominator)
    mat = list(rows.values())
    piv_cols = []
    r = 0
    for col in range(m):
        p = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                fct = mat[i][col]
                mat[i] = [a - fct * b for a, b in zip(mat[i], mat[r])]
        piv_cols.append(col)
        r += 1
    if any(row[m] for row in mat[r:]):
        return None
    x = [Fraction(0)] * m
    for i, col in enumerate(piv_cols):
        x[col] = mat[i][m]
    return x
