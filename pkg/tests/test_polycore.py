from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from echow.polycore import (GradedRing, NotDivisible, ParseError, Polynomial, RankMismatch,
                            divide_exact_by_linear, from_json, integer_content, substitute,
                            to_json)

R = GradedRing(("x", "y", "z"), (1, 1, 2))
x, y, z = R.gen("x"), R.gen("y"), R.gen("z")

coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=6)
exps = st.tuples(*(st.integers(0, 3) for _ in range(3)))
polys = st.dictionaries(exps, coeffs, max_size=6).map(lambda d: Polynomial(3, d))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == Polynomial.zero(3)


@settings(max_examples=60, deadline=None)
@given(polys)
def test_json_round_trip(f):
    assert from_json(3, to_json(f)) == f


def test_json_uses_decimal_strings_for_big_coefficients():
    big = 2 ** 37 * 3 ** 4 * 5 ** 5 * 7 * 11 * 13 * 61
    f = Polynomial(2, {(1, 0): big, (0, 1): Fraction(1, 3)})
    terms = to_json(f)
    assert {t["n"] for t in terms} == {str(big), "1"}
    assert all(isinstance(t["d"], str) for t in terms)


def test_parse_and_format():
    f = R.parse("3*x^2*z - (x - y)^2 + z^2/4")
    assert f == 3 * x ** 2 * z - (x - y) ** 2 + z ** 2 / 4
    assert R.parse(R.format(f)) == f
    with pytest.raises(ParseError):
        R.parse("x +* y")
    with pytest.raises(ParseError):
        R.parse("w + x")


def test_weighted_degree_and_homogeneous_parts():
    f = x * y + z + x ** 3
    assert R.degree_of(x * y + z) == 2
    assert R.degree_of(f) is None
    assert f.homogeneous_part(3, R.degrees) == x ** 3


def test_monomials_counts_and_order():
    monos = R.monomials(4)
    # x^a y^b z^c with a + b + 2c = 4
    assert len(monos) == 9
    assert len(set(monos)) == len(monos)


def test_substitute_is_a_ring_map():
    images = {0: x + y, 1: x - y, 2: x * y}
    f = x ** 2 * z + 3 * y
    g = substitute(f, images, 3)
    assert g == (x + y) ** 2 * (x * y) + 3 * (x - y)


def test_divide_exact_by_linear():
    a = x - 2 * y
    q = x ** 2 + y * z
    assert divide_exact_by_linear(a * q, a) == q
    with pytest.raises(NotDivisible):
        divide_exact_by_linear(x ** 2 + y ** 2, a)


def test_integer_content():
    c, g = integer_content(Polynomial(2, {(1, 0): Fraction(6, 5), (0, 1): Fraction(-9, 5)}))
    assert c == Fraction(3, 5)
    assert g == Polynomial(2, {(1, 0): 2, (0, 1): -3})


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        Polynomial(2, {(1, 0, 0): 1})


def test_include_and_extend():
    big = R.extend(("w",), (3,))
    assert big.include(x * z, R) == big.gen("x") * big.gen("z")
