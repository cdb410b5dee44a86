"""Integer lattices: Hermite normal form, reduction and Smith invariants.

Vectors are sparse dicts column -> int.  Column order is the order of
significance: the pivot of a row is its smallest column.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable


def _xgcd(a: int, b: int):
    """(g, x, y) with g = x*a + y*b = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _axpy(x: dict, a: int, y: dict, b: int) -> dict:
    """a*x + b*y."""
    out = {k: a * v for k, v in x.items()} if a != 1 else dict(x)
    for k, v in y.items():
        nv = out.get(k, 0) + b * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    if a == 0:
        out = {k: v for k, v in out.items() if v}
    return out


class Lattice:
    """A sublattice of Z^n kept in row Hermite normal form.

    Pivots are positive, and entries above a pivot (in other rows) are
    reduced into [0, pivot).
    """

    def __init__(self, rows: Iterable[dict] = ()):
        self.pivots: dict = {}
        for r in rows:
            self.add(r)

    def __len__(self) -> int:
        return len(self.pivots)

    def add(self, row: dict) -> None:
        row = {k: v for k, v in row.items() if v}
        while row:
            c = min(row)
            if c not in self.pivots:
                if row[c] < 0:
                    row = {k: -v for k, v in row.items()}
                self.pivots[c] = row
                self._tidy(c)
                return
            p = self.pivots[c]
            a, b = p[c], row[c]
            if b % a == 0:
                row = _axpy(row, 1, p, -(b // a))
                continue
            g, x, y = _xgcd(a, b)
            new_p = _axpy(p, x, row, y)
            row = _axpy(p, -(b // g), row, a // g)
            self.pivots[c] = new_p
            self._tidy(c)
        return

    def _tidy(self, c: int) -> None:
        """Reduce the column c of every other row modulo the pivot at c."""
        p = self.pivots[c]
        for k, r in self.pivots.items():
            if k < c and c in r:
                q = r[c] // p[c]
                if q:
                    self.pivots[k] = _axpy(r, 1, p, -q)

    def reduce(self, v: dict, symmetric: bool = False) -> dict:
        """Canonical representative of v modulo the lattice.

        Each pivot column is brought into [0, pivot), or into
        (-pivot/2, pivot/2] with ``symmetric``.
        """
        v = {k: x for k, x in v.items() if x}
        for c in sorted(self.pivots):
            if c not in v:
                continue
            a = self.pivots[c][c]
            q = v[c] // a
            if symmetric and 2 * (v[c] - q * a) > a:
                q += 1
            if q:
                v = _axpy(v, 1, self.pivots[c], -q)
        return v

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def rows(self) -> list:
        return [self.pivots[c] for c in sorted(self.pivots)]


def smith_invariants(rows: list, ncols: int) -> list:
    """Nonzero invariant factors d_1 | d_2 | ... of the integer row span."""
    lat = Lattice(rows)
    mat = [[r.get(j, 0) for j in range(ncols)] for r in lat.rows()]
    return _smith_dense(mat)


def _smith_dense(a: list) -> list:
    a = [row[:] for row in a if any(row)]
    if not a:
        return []
    m, n = len(a), len(a[0])
    diag = []
    t = 0
    while t < m and t < n:
        # choose the smallest nonzero entry in the remaining block as pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
                    if abs(a[i][j]) == 1:
                        break
            if best and abs(a[best[0]][best[1]]) == 1:
                break
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                # the pivot must divide the remaining block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest entry of row t / column t into the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, i, j = min(cands)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def content(v: dict) -> int:
    g = 0
    for x in v.values():
        g = gcd(g, x)
    return g


def rank_mod_p(rows: list, p: int) -> int:
    """Rank over F_p of the given sparse integer rows."""
    pivots: dict = {}
    for r in rows:
        r = {k: v % p for k, v in r.items() if v % p}
        while r:
            c = min(r)
            if c not in pivots:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            q = r[c]
            for k, v in pivots[c].items():
                nv = (r.get(k, 0) - q * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)
