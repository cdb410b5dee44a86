from echow.groebner import TruncatedGroebner, ideal_contains
from echow.polycore import GradedRing

R = GradedRing(("x", "y", "z"), (1, 1, 1))
x, y, z = R.gen("x"), R.gen("y"), R.gen("z")


def test_membership_in_a_simple_ideal():
    gens = [x * y - z ** 2, x ** 2 - y * z]
    assert ideal_contains(R, gens, x * (x * y - z ** 2) + y * (x ** 2 - y * z))
    assert not ideal_contains(R, gens, x * y)


def test_normal_form_is_exact():
    g = TruncatedGroebner(R, [x - y])
    f = 3 * x ** 2 + y * z
    nf = g.reduce(f)
    assert g.contains(f - nf)
    assert g.reduce(nf) == nf


def test_hilbert_function_of_a_complete_intersection():
    # (x^2, y^2, z^2): quotient dimensions 1, 3, 3, 1, 0
    g = TruncatedGroebner(R, [x ** 2, y ** 2, z ** 2])
    assert [g.quotient_dimension(d) for d in range(5)] == [1, 3, 3, 1, 0]


def test_weighted_ring():
    W = GradedRing(("a", "b"), (1, 2))
    a, b = W.gen("a"), W.gen("b")
    g = TruncatedGroebner(W, [b - a ** 2])
    assert g.contains(b ** 2 - a ** 4)
    assert not g.contains(b ** 2)
