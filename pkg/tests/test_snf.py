from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from echow.snf import Lattice, rank_mod_p, smith_invariants

matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=1, max_size=5))


def _rows(a):
    return [{j: v for j, v in enumerate(r) if v} for r in a]


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_invariant_factors_match_sympy(a):
    n = len(a[0])
    s = smith_normal_form(Matrix(a), domain=ZZ)
    ref = [abs(s[i, i]) for i in range(min(len(a), n)) if s[i, i] != 0]
    assert smith_invariants(_rows(a), n) == ref


@settings(max_examples=100, deadline=None)
@given(matrices, st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_lattice_membership(a, coeffs):
    lat = Lattice(_rows(a))
    combo = {}
    for c, r in zip(coeffs, _rows(a)):
        for k, v in r.items():
            combo[k] = combo.get(k, 0) + c * v
    assert lat.contains(combo)
    red = lat.reduce({0: 1})
    assert lat.reduce(red) == red


def test_rank_mod_p():
    rows = _rows([[2, 0], [0, 3]])
    assert rank_mod_p(rows, 2) == 1
    assert rank_mod_p(rows, 3) == 1
    assert rank_mod_p(rows, 5) == 2


def test_torsion_example():
    # Z^2 / <(2, 0), (0, 3)> = Z/6
    assert smith_invariants(_rows([[2, 0], [0, 3]]), 2) == [1, 6]
