import pytest

from echow.rootweyl import (INVARIANT_DEGREES, WEYL_ORDER, InvalidWord, ParabolicSpec,
                            canonicalize, count_by_length, enumerate_by_length,
                            is_minimal_coset_rep, length, load_enumeration_cache,
                            normalize_kind, parabolic_poincare, poincare_coefficients, reflect,
                            root_system)


@pytest.mark.parametrize("kind,count", [("E6", 36), ("E7", 63), ("E8", 120)])
def test_positive_root_counts(kind, count):
    assert len(root_system(kind).positive_roots) == count


@pytest.mark.parametrize("kind", ["E6", "E7", "E8"])
def test_weyl_order_from_degrees(kind):
    order = 1
    for d in INVARIANT_DEGREES[kind]:
        order *= d
    assert order == WEYL_ORDER[kind]
    assert sum(poincare_coefficients(INVARIANT_DEGREES[kind])) == order


def test_e6_length_distribution_matches_poincare_polynomial(e6):
    assert count_by_length(e6) == poincare_coefficients(INVARIANT_DEGREES["E6"])


def test_coset_words_of_length_three_and_four(e6):
    par = ParabolicSpec.complement_of(6, [2])
    words = [w.word_string for w in enumerate_by_length(e6, 4, par) if w.length >= 3]
    assert words == ["342", "542", "1342", "3542", "6542"]


def test_coset_size_and_poincare(e6):
    par = ParabolicSpec.complement_of(6, [2])
    elems = list(enumerate_by_length(e6, 36, par))
    assert len(elems) == 51840 // 720
    assert all(is_minimal_coset_rep(e6, w.word, par) for w in elems)
    counts = [0] * 22
    for w in elems:
        counts[w.length] += 1
    assert counts == parabolic_poincare(e6, par)


def test_canonical_word_is_lex_least(e6):
    # s3 s4 s3 = s4 s3 s4 is a braid relation
    assert canonicalize(e6, "434").word_string == "343"
    assert length(e6, "4343") == 2
    assert length(e6, "11") == 0


def test_reflection_is_an_involution(e7):
    f = e7.weight(3) ** 2 + e7.weight(4) * e7.weight(1)
    for i in range(1, 8):
        assert reflect(e7, i, reflect(e7, i, f)) == f


def test_invalid_input(e6):
    with pytest.raises(InvalidWord):
        length(e6, "17")
    with pytest.raises(ValueError):
        normalize_kind("F4")


def test_enumeration_cache_round_trip(tmp_path, e6):
    par = ParabolicSpec.complement_of(6, [2])
    first = list(enumerate_by_length(e6, 6, par, cache_dir=str(tmp_path)))
    cached = load_enumeration_cache(str(tmp_path), e6, 6, par)
    assert [w.word for w in cached] == [w.word for w in first]
