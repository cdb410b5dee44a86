import pytest

from echow import data
from echow.coords import tc_ring, tc_to_weights
from echow.errors import CapExceeded
from echow.invariants import (ORBIT_SIZES, closed_form_I, closed_form_crosscheck, d_formula,
                              direct_elementary, invariant_I, jacobian_rank_check, orbit_set,
                              verify_nj)
from echow.rootweyl import root_system


@pytest.mark.parametrize("kind", ["E6", "E7", "E8"])
def test_orbit_sets(kind):
    rs = root_system(kind)
    S = orbit_set(rs)
    assert len(S) == ORBIT_SIZES[kind]
    assert S.is_stable(rs)
    assert all(a == 0 for a in S.element_sum())


def test_e8_orbit_set_is_the_root_system(e8):
    # 240 = twice the number of positive roots
    assert len(orbit_set(e8)) == 2 * len(e8.positive_roots)


@pytest.mark.parametrize("kind,n", [("E6", 2), ("E6", 5), ("E6", 9), ("E7", 6), ("E7", 10),
                                    ("E8", 8)])
def test_closed_forms_agree_with_orbit_sums(kind, n):
    rs = root_system(kind)
    assert closed_form_crosscheck(rs, n).passed


def test_closed_form_I_in_tc(e7):
    ring = tc_ring("E7")
    assert tc_to_weights(e7, closed_form_I("E7", 12), ring) == invariant_I(e7, 12).value


def test_printed_d_formula_deviates_for_e7(e7):
    # the literal reading of the printed E7 d_n differs from e_n(x) in low degree
    ring = tc_ring("E7")
    direct = direct_elementary(e7, 4)
    assert tc_to_weights(e7, d_formula("E7", 4, "corrected"), ring) == direct
    assert tc_to_weights(e7, d_formula("E7", 4, "printed"), ring) != direct


def test_odd_power_sums_vanish_for_e7(e7):
    assert invariant_I(e7, 5).value.is_zero()


@pytest.mark.parametrize("kind", ["E6", "E7", "E8"])
def test_basic_invariants_independent(kind):
    assert jacobian_rank_check(kind, seed=3, max_degree=14)


def test_nj_e6_first_rows(e6):
    n = data.nj_value("E6", 5)
    assert n == -1920
    assert verify_nj(e6, 5, n)
    assert not verify_nj(e6, 5, 2 * n)
    assert not verify_nj(e6, 5, n + 1)


def test_nj_cap(e7):
    with pytest.raises(CapExceeded):
        verify_nj(e7, 18, data.nj_value("E7", 18))


def test_nj_e7_top_row_with_opt_in(e7):
    n = data.nj_value("E7", 18)
    assert verify_nj(e7, 18, n, caps={"E7": 18})
    assert not verify_nj(e7, 18, 2 * n, caps={"E7": 18})


def test_nj_e8_degree_20_uses_u_relation(e8):
    n = data.nj_value("E8", 20)
    assert verify_nj(e8, 20, n, caps={"E8": 20})
