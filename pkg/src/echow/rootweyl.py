"""Root systems of type E6, E7, E8 and their Weyl groups.

Conventions: Bourbaki numbering, so nodes 1-3-4-5-...-l form a chain and node
2 hangs off node 4.  Polynomials live in Q[w_1, ..., w_l] where w_i are the
fundamental weights.  The simple root alpha_i equals sum_j C[j][i] w_j and the
simple reflection s_i fixes w_j for j != i while sending w_i to
(sum of neighbouring w_j) - w_i.

A Weyl group element w is identified by its matrix on weight coordinates; the
enumeration code uses the equivalent key w(rho) with rho = (1, ..., 1), which
is a regular weight and therefore has trivial stabilizer.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import cached_property
from math import comb, prod
from typing import Iterable, Iterator, Sequence

from .polycore import Polynomial, dict_add_into, dict_mul

KINDS = ("E6", "E7", "E8")

#: degrees of the basic Weyl group invariants
INVARIANT_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}

WEYL_ORDER = {"E6": 51840, "E7": 2903040, "E8": 696729600}


class UnknownKind(ValueError):
    pass


class InvalidWord(ValueError):
    pass


def normalize_kind(kind: str) -> str:
    k = str(kind).upper()
    if k not in KINDS:
        raise UnknownKind(f"unsupported root system {kind!r}; expected one of {KINDS}")
    return k


def _edges(rank: int):
    chain = [(1, 3), (3, 4)] + [(i, i + 1) for i in range(4, rank)]
    return chain + [(2, 4)]


@dataclass(frozen=True)
class ParabolicSpec:
    """Indices I_P of the simple roots generating the Levi factor W_P."""

    indices: frozenset

    @classmethod
    def complement_of(cls, rank: int, removed: Iterable[int]) -> "ParabolicSpec":
        removed = set(removed)
        return cls(frozenset(i for i in range(1, rank + 1) if i not in removed))

    def excluded(self, rank: int) -> tuple:
        return tuple(i for i in range(1, rank + 1) if i not in self.indices)


@dataclass(frozen=True)
class WeylElement:
    """Element of W with its lexicographically least reduced word."""

    matrix: tuple
    word: tuple
    length: int

    @property
    def word_string(self) -> str:
        return "".join(str(i) for i in self.word)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)


@dataclass(frozen=True)
class RootSystem:
    kind: str
    rank: int
    cartan: tuple
    adjacency: tuple = field(repr=False)

    # -- basic data ---------------------------------------------------------
    def simple_root(self, i: int) -> tuple:
        """alpha_i in weight coordinates."""
        return tuple(self.cartan[j][i - 1] for j in range(self.rank))

    def alpha(self, i: int) -> Polynomial:
        return Polynomial.linear(self.simple_root(i))

    def weight(self, i: int) -> Polynomial:
        return Polynomial.variable(self.rank, i - 1)

    def neighbours(self, i: int) -> tuple:
        return self.adjacency[i - 1]

    @cached_property
    def positive_roots(self) -> tuple:
        """Positive roots in simple-root coordinates, sorted by height."""
        n = self.rank
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        roots = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for r in layer:
                for i in range(n):
                    # pairing <r, alpha_i^vee> for a simply laced system
                    p = sum(r[j] * self.cartan[i][j] for j in range(n))
                    if p < 0:
                        s = r[:i] + (r[i] + 1,) + r[i + 1:]
                        if s not in roots:
                            roots.add(s)
                            nxt.append(s)
            layer = nxt
        return tuple(sorted(roots, key=lambda r: (sum(r), r)))

    def root_in_weights(self, r: Sequence[int]) -> tuple:
        return tuple(sum(self.cartan[j][i] * r[i] for i in range(self.rank)) for j in range(self.rank))

    # -- t basis ------------------------------------------------------------
    @cached_property
    def t_coordinates(self) -> tuple:
        """Weight coordinates of t_1, ..., t_l (index 0..l-1) and of t (index l)."""
        n = self.rank

        def v(*pairs):
            c = [0] * n
            for i, x in pairs:
                c[i - 1] += x
            return tuple(c)

        ts = [v((1, -1), (2, 1)), v((1, 1), (2, 1), (3, -1)), v((2, 1), (3, 1), (4, -1))]
        ts += [v((i, 1), (i + 1, -1)) for i in range(4, n)]
        ts += [v((n, 1))]
        return tuple(ts) + (v((2, 1)),)

    def t_form(self, i: int) -> Polynomial:
        """t_i for 1 <= i <= l; t_form(0) is t = w_2."""
        if i == 0:
            return Polynomial.linear(self.t_coordinates[self.rank])
        return Polynomial.linear(self.t_coordinates[i - 1])

    @cached_property
    def _elementary(self) -> tuple:
        n = self.rank
        one = {(0,) * n: 1}
        e = [one] + [{} for _ in range(n)]
        for x in self.t_coordinates[:n]:
            lin = Polynomial.linear(x).numerators
            for j in range(n, 0, -1):
                dict_add_into(e[j], dict_mul(e[j - 1], lin))
        return tuple(e)

    def c(self, i: int) -> Polynomial:
        """Elementary symmetric function c_i = e_i(t_1, ..., t_l) in weights."""
        if not 0 <= i <= self.rank:
            return Polynomial.zero(self.rank)
        return Polynomial.from_ints(self.rank, dict(self._elementary[i]))

    @cached_property
    def t_transpositions(self) -> dict:
        """For i != 2, the pair (a, b) such that s_i swaps t_a and t_b."""
        table = {}
        ts = self.t_coordinates[: self.rank]
        for i in range(1, self.rank + 1):
            if i == 2:
                continue
            images = [self.reflect_vector(i, x) for x in ts]
            moved = [a for a in range(self.rank) if images[a] != ts[a]]
            if len(moved) != 2:
                raise AssertionError(f"s_{i} does not act as a transposition")
            a, b = moved
            if images[a] != ts[b] or images[b] != ts[a]:
                raise AssertionError(f"s_{i} does not swap t_{a + 1}, t_{b + 1}")
            table[i] = (a + 1, b + 1)
        return table

    # -- reflections --------------------------------------------------------
    def reflect_vector(self, i: int, v: Sequence[int]) -> tuple:
        """s_i applied to a weight given in weight coordinates."""
        k = v[i - 1]
        if not k:
            return tuple(v)
        a = self.simple_root(i)
        return tuple(x - k * y for x, y in zip(v, a))

    def reflection_matrix(self, i: int) -> tuple:
        n = self.rank
        a = self.simple_root(i)
        return tuple(
            tuple((1 if r == c else 0) - (a[r] if c == i - 1 else 0) for c in range(n))
            for r in range(n))


def build_root_system(kind: str) -> RootSystem:
    kind = normalize_kind(kind)
    rank = int(kind[1])
    adj = {i: set() for i in range(1, rank + 1)}
    for a, b in _edges(rank):
        adj[a].add(b)
        adj[b].add(a)
    cartan = tuple(
        tuple(2 if i == j else (-1 if j in adj[i] else 0) for j in range(1, rank + 1))
        for i in range(1, rank + 1))
    rs = RootSystem(kind, rank, cartan, tuple(tuple(sorted(adj[i])) for i in range(1, rank + 1)))
    expected = {"E6": 36, "E7": 63, "E8": 120}[kind]
    if len(rs.positive_roots) != expected:
        raise AssertionError("positive root closure is wrong")
    return rs


_CACHE: dict = {}


def root_system(kind: str) -> RootSystem:
    """Memoized :func:`build_root_system`."""
    kind = normalize_kind(kind)
    if kind not in _CACHE:
        _CACHE[kind] = build_root_system(kind)
    return _CACHE[kind]


# ---------------------------------------------------------------------------
# polynomial action

def reflect(rs: RootSystem, i: int, f: Polynomial) -> Polynomial:
    """s_i(f) via w_i -> sigma_i - w_i."""
    if f.nvars != rs.rank:
        raise ValueError("polynomial is not in the weight ring of this root system")
    vi = i - 1
    nb = [j - 1 for j in rs.neighbours(i)]
    out: dict = {}
    for e, v in f.numerators.items():
        k = e[vi]
        if not k:
            out[e] = out.get(e, 0) + v
            continue
        base = list(e)
        base[vi] = 0
        for term, c in _reflection_power(rs.rank, vi, tuple(nb), k):
            ne = tuple(a + b for a, b in zip(base, term))
            out[ne] = out.get(ne, 0) + v * c
    return Polynomial.from_ints(rs.rank, {k: v for k, v in out.items() if v}, f.denominator)


_REFL_POW: dict = {}


def _reflection_power(n, vi, nb, k):
    key = (n, vi, nb, k)
    if key not in _REFL_POW:
        lin = {}
        for j in nb:
            e = [0] * n
            e[j] = 1
            lin[tuple(e)] = 1
        e = [0] * n
        e[vi] = 1
        lin[tuple(e)] = -1
        p = {(0,) * n: 1}
        for _ in range(k):
            p = dict_mul(p, lin)
        _REFL_POW[key] = tuple(p.items())
    return _REFL_POW[key]


def act(rs: RootSystem, word: Sequence[int], f: Polynomial) -> Polynomial:
    """w(f) for w = s_{i1} ... s_{ik}; the rightmost reflection acts first."""
    for i in reversed(list(word)):
        f = reflect(rs, i, f)
    return f


# ---------------------------------------------------------------------------
# words and elements

def _check_word(rs: RootSystem, word) -> tuple:
    if isinstance(word, str):
        try:
            word = [int(ch) for ch in word]
        except ValueError:
            raise InvalidWord(f"word {word!r} contains a non-digit") from None
    word = tuple(word)
    for i in word:
        if not isinstance(i, int) or not 1 <= i <= rs.rank:
            raise InvalidWord(f"letter {i!r} is not a simple reflection of {rs.kind}")
    return word


def rho_point(rs: RootSystem, word) -> tuple:
    """w(rho) in weight coordinates for w given by a word."""
    word = _check_word(rs, word)
    u = (1,) * rs.rank
    for i in reversed(word):
        u = rs.reflect_vector(i, u)
    return u


def word_from_point(rs: RootSystem, u: Sequence[int]) -> tuple:
    """Lexicographically least reduced word of the w with w(rho) = u.

    Greedy: the first letter is the smallest left descent i, recognised by a
    negative i-th coordinate of w(rho); then continue with s_i w.
    """
    u = tuple(u)
    word = []
    while True:
        for i in range(1, rs.rank + 1):
            if u[i - 1] < 0:
                word.append(i)
                u = rs.reflect_vector(i, u)
                break
        else:
            break
    if any(x != 1 for x in u):
        raise ValueError("point is not in the W-orbit of rho")
    return tuple(word)


def inversion_count(rs: RootSystem, u: Sequence[int]) -> int:
    """Length of w from w(rho): number of positive roots beta with <w rho, beta> < 0."""
    return sum(1 for r in rs.positive_roots if sum(a * b for a, b in zip(r, u)) < 0)


def matrix_of_word(rs: RootSystem, word) -> tuple:
    word = _check_word(rs, word)
    n = rs.rank
    m = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    for i in reversed(word):
        a = rs.simple_root(i)
        # left multiply by s_i: rows change as row_r -= a_r * row_{i-1}
        pivot = m[i - 1][:]
        for r in range(n):
            if a[r]:
                m[r] = [x - a[r] * y for x, y in zip(m[r], pivot)]
    return tuple(tuple(row) for row in m)


def element_from_point(rs: RootSystem, u: Sequence[int]) -> WeylElement:
    word = word_from_point(rs, u)
    return WeylElement(matrix_of_word(rs, word), word, len(word))


def canonicalize(rs: RootSystem, word) -> WeylElement:
    """The element represented by ``word`` with its canonical reduced word."""
    return element_from_point(rs, rho_point(rs, word))


def length(rs: RootSystem, word) -> int:
    return inversion_count(rs, rho_point(rs, word))


def is_minimal_coset_rep(rs: RootSystem, word, parabolic: ParabolicSpec) -> bool:
    """w is in W^P iff w(alpha_j) > 0 for every j in I_P."""
    m = matrix_of_word(rs, word)
    for j in parabolic.indices:
        a = rs.simple_root(j)
        image = [sum(m[r][c] * a[c] for c in range(rs.rank)) for r in range(rs.rank)]
        if not _is_positive_weight_root(rs, image):
            return False
    return True


def _is_positive_weight_root(rs: RootSystem, v) -> bool:
    # convert a root from weight to simple-root coordinates (C is unimodular up
    # to a small determinant; solve exactly with fractions)
    coords = _solve_cartan(rs, v)
    if all(x >= 0 for x in coords):
        return True
    if all(x <= 0 for x in coords):
        return False
    raise ValueError("vector is not a root")


def _solve_cartan(rs, v):
    from fractions import Fraction
    n = rs.rank
    a = [[Fraction(rs.cartan[r][c]) for c in range(n)] + [Fraction(v[r])] for r in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] / a[r][r] for r in range(n)]


# ---------------------------------------------------------------------------
# enumeration

def _bfs_points(rs: RootSystem, max_len: int, parabolic: ParabolicSpec | None):
    """Yield lists of (u, u_P) by length, u = w(rho), u_P = w(rho_P)."""
    n = rs.rank
    if parabolic is None:
        rho_p = (1,) * n
    else:
        rho_p = tuple(0 if (i + 1) in parabolic.indices else 1 for i in range(n))
    layer = {(1,) * n: rho_p}
    yield 0, layer
    for k in range(1, max_len + 1):
        new = {}
        for u, up in layer.items():
            for i in range(1, n + 1):
                if up[i - 1] > 0:
                    nu = rs.reflect_vector(i, u)
                    if nu not in new:
                        new[nu] = rs.reflect_vector(i, up)
        if not new:
            return
        yield k, new
        layer = new


def enumerate_by_length(rs: RootSystem, max_len: int, parabolic: ParabolicSpec | None = None,
                        cache_dir: str | None = None) -> Iterator[WeylElement]:
    """Elements of W (or of W^P) of length <= max_len, by length then word.

    Going up in length uses left multiplication s_i w.  For W^P the test is on
    w(rho_P) with rho_P the sum of the fundamental weights outside I_P, whose
    stabilizer is W_P; a positive i-th coordinate means s_i w is a longer
    minimal coset representative.
    """
    if max_len < 0:
        return iter(())
    if cache_dir is not None:
        cached = load_enumeration_cache(cache_dir, rs, max_len, parabolic)
        if cached is not None:
            return iter(cached)
    elems = []
    for k, layer in _bfs_points(rs, max_len, parabolic):
        batch = [element_from_point(rs, u) for u in layer]
        batch.sort(key=lambda w: w.word)
        elems.extend(batch)
    if cache_dir is not None:
        save_enumeration_cache(cache_dir, rs, max_len, parabolic, elems)
    return iter(elems)


def count_by_length(rs: RootSystem, max_len: int | None = None,
                    parabolic: ParabolicSpec | None = None) -> list:
    """Number of elements of each length 0..max_len (all lengths if None)."""
    top = len(rs.positive_roots) if max_len is None else max_len
    counts = []
    for k, layer in _bfs_points(rs, top, parabolic):
        counts.append(len(layer))
    if max_len is not None:
        counts += [0] * (top + 1 - len(counts))
    return counts


def poincare_coefficients(degrees: Sequence[int], max_len: int | None = None) -> list:
    """Coefficients of prod (1 + q + ... + q^{d-1})."""
    poly = [1]
    for d in degrees:
        new = [0] * (len(poly) + d - 1)
        for i, c in enumerate(poly):
            for j in range(d):
                new[i + j] += c
        poly = new
    if max_len is not None:
        poly = (poly + [0] * (max_len + 1))[: max_len + 1]
    return poly


def parabolic_poincare(rs: RootSystem, parabolic: ParabolicSpec, max_len: int | None = None) -> list:
    """Poincare polynomial of W^P as a quotient of the two Weyl group products."""
    full = poincare_coefficients(INVARIANT_DEGREES[rs.kind])
    levi = _levi_degrees(rs, parabolic)
    sub = poincare_coefficients(levi)
    # exact polynomial long division full / sub
    q = [0] * (len(full) - len(sub) + 1)
    rem = list(full)
    for i in range(len(q) - 1, -1, -1):
        c = rem[i + len(sub) - 1] // sub[-1]
        q[i] = c
        for j, s in enumerate(sub):
            rem[i + j] -= c * s
    if any(rem):
        raise AssertionError("Levi Poincare polynomial does not divide")
    if max_len is not None:
        q = (q + [0] * (max_len + 1))[: max_len + 1]
    return q


def _levi_degrees(rs: RootSystem, parabolic: ParabolicSpec) -> list:
    """Degrees of the Levi Weyl group, from its connected components."""
    nodes = set(parabolic.indices)
    degs = []
    while nodes:
        comp = {nodes.pop()}
        stack = list(comp)
        while stack:
            x = stack.pop()
            for y in rs.neighbours(x):
                if y in nodes:
                    nodes.remove(y)
                    comp.add(y)
                    stack.append(y)
        degs.extend(_component_degrees(rs, comp))
    return degs


def _component_degrees(rs, comp):
    n = len(comp)
    branch = [x for x in comp if sum(1 for y in rs.neighbours(x) if y in comp) == 3]
    if not branch:
        return list(range(2, n + 2))  # type A_n
    arms = []
    b = branch[0]
    for y in rs.neighbours(b):
        if y in comp:
            size, prev, cur = 1, b, y
            while True:
                nxt = [z for z in rs.neighbours(cur) if z in comp and z != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                size += 1
            arms.append(size)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:  # D_n
        return list(range(2, 2 * n - 1, 2)) + [n]
    return list(INVARIANT_DEGREES[f"E{n}"])


# ---------------------------------------------------------------------------
# enumeration cache on disk

CACHE_FORMAT_VERSION = 1


def _cache_path(cache_dir, rs, max_len, parabolic):
    tag = "full" if parabolic is None else "P" + "".join(map(str, sorted(parabolic.indices)))
    return os.path.join(cache_dir, f"{rs.kind.lower()}_{tag}_len{max_len}.json")


def _cache_header(rs, max_len, parabolic):
    return {
        "kind": rs.kind,
        "max_len": max_len,
        "parabolic": None if parabolic is None else sorted(parabolic.indices),
        "format_version": CACHE_FORMAT_VERSION,
    }


def save_enumeration_cache(cache_dir, rs, max_len, parabolic, elems) -> str:
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, rs, max_len, parabolic)
    data = {
        "header": _cache_header(rs, max_len, parabolic),
        "records": [{"word": w.word_string, "matrix": [list(r) for r in w.matrix]} for w in elems],
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(data, fh, sort_keys=True)
    os.replace(tmp, path)
    return path


def load_enumeration_cache(cache_dir, rs, max_len, parabolic):
    """Return cached elements or None when absent or stale; records are re-checked."""
    path = _cache_path(cache_dir, rs, max_len, parabolic)
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        return None
    if data.get("header") != _cache_header(rs, max_len, parabolic):
        return None
    out = []
    for rec in data["records"]:
        word = tuple(int(ch) for ch in rec["word"])
        m = tuple(tuple(r) for r in rec["matrix"])
        if matrix_of_word(rs, word) != m:
            return None
        out.append(WeylElement(m, word, len(word)))
    return out
