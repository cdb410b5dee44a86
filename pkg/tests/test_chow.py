import pytest

from echow import data
from echow.chow import (GradedZPresentation, coprime_kill, derive_chow, generator_orders,
                        graded_structure, mod_p_analysis, mod_p_dimension, mod_p_report,
                        stated_gamma_presentation, theorem_presentation, verify_e8_congruences,
                        verify_isomorphism)


@pytest.mark.parametrize("kind", ["E6", "E7", "E8"])
def test_derivation_reproduces_the_stated_quotient(kind):
    der = derive_chow(kind)
    assert der.presentation.relations == stated_gamma_presentation(kind).relations
    assert der.replay()


def test_e8_rho10_step():
    der = derive_chow("E8")
    step = next(s for s in der.steps if s.relation == "rho10")
    assert der.presentation.ring.format(step.reduced) == "g5^2 - 3*g10"


def test_e6_structure():
    pres = derive_chow("E6").presentation
    assert pres.structure(0) == (1, ())
    assert pres.structure(3) == (0, (2,))
    assert pres.structure(4) == (0, (3,))
    assert pres.structure(7) == (0, ())
    assert pres.structure(8) == (0, (3,))
    assert pres.structure(6) == (0, ())


def test_graded_structure_is_torsion_in_positive_degrees():
    s = graded_structure(derive_chow("E7").presentation, 20)
    assert all(f == 0 for d, (f, _) in s.degrees.items() if d > 0)


def test_coprime_kill():
    for kind, cap in (("E6", 24), ("E7", 40)):
        assert coprime_kill(derive_chow(kind).presentation, cap) == []
    assert generator_orders(derive_chow("E6").presentation) == {"g3": 2, "g4": 3}


def test_identity_map_is_an_isomorphism():
    a = theorem_presentation("E6")
    rep = verify_isomorphism(a, a, {"X3": "X3", "X4": "X4"}, 12)
    assert rep.passed


def test_unit_multiple_is_still_an_isomorphism():
    # 2 is a unit modulo the order 3 of g4
    a = theorem_presentation("E6")
    b = derive_chow("E6").presentation
    assert verify_isomorphism(a, b, {"X3": "g3", "X4": "2*g4"}, 12).passed


def test_wrong_map_is_detected():
    a = theorem_presentation("E6")
    b = derive_chow("E6").presentation
    rep = verify_isomorphism(a, b, {"X3": "g3", "X4": "3*g4"}, 12)
    assert not rep.passed


def test_non_homogeneous_map_rejected():
    a = theorem_presentation("E6")
    b = derive_chow("E6").presentation
    with pytest.raises(ValueError):
        verify_isomorphism(a, b, {"X3": "g3 + g4", "X4": "g4"}, 6)


def test_e8_isomorphism_under_dictionary():
    rep = verify_isomorphism(theorem_presentation("E8"), derive_chow("E8").presentation,
                             data.CHOW_GENERATOR_MAP["E8"], 30)
    assert rep.passed


def test_e8_congruences():
    assert verify_e8_congruences().passed


def test_mod_2_normal_form_for_e8():
    res = mod_p_analysis("E8", 2)
    assert res.normal_form() == "F_2[X3,X5,X9,X15]/(X3^8, X5^4, X9^2, X15^2)"
    assert res.exceptional == (18, 20, 24, 30)


def test_non_torsion_prime_is_trivial():
    res = mod_p_analysis("E6", 5)
    assert res.generators == {}
    assert res.exceptional == ()
    assert [mod_p_dimension(res, d) for d in range(4)] == [1, 0, 0, 0]


@pytest.mark.parametrize("kind,p", sorted(data.MOD_P_TABLE))
def test_mod_p_reports(kind, p):
    assert mod_p_report(kind, p, cap=30).passed


def test_parse_rejects_non_integral():
    with pytest.raises(ValueError):
        GradedZPresentation.parse([("X", 3)], ["X/2"])
