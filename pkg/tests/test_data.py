"""Guards on the transcribed tables."""
import hashlib
import json

import pytest

from echow import data
from echow.rootweyl import INVARIANT_DEGREES, length, root_system

TABLES = ["RELATIONS", "E8_AUXILIARIES", "GAMMA_DEGREES", "GAMMA_MULTIPLES", "DELTAS",
          "GAMMA_EXPANSIONS", "INVERSE_DELTA_FORMS", "INVERSE_GAMMA_FORMS", "Y_WORDS",
          "Y_DEGREES", "Y_IN_GAMMA", "ALT_RELATIONS", "ALT_IDENTITIES", "CHOW_GENERATORS",
          "CHOW_THEOREM", "CHOW_GAMMA_STATED", "CHOW_GENERATOR_MAP", "E8_CONGRUENCES",
          "NJ_TABLE", "MOD_P_TABLE", "E8_MOD2_STATED"]

# sha256 of the canonical JSON form of TABLES; changes only when a table is edited
CHECKSUM = "a8c8bb1d28097cd835576335a2e64e1d2fcaa9d70417bae0a59d4e2f24eaeb1d"


def _canonical(obj):
    if isinstance(obj, dict):
        return {repr(k) if not isinstance(k, str) else k: _canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canonical(v) for v in obj]
    return obj


def checksum() -> str:
    blob = json.dumps({n: _canonical(getattr(data, n)) for n in TABLES}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def test_checksum_is_stable():
    assert checksum() == CHECKSUM


def test_e8_gamma15_coefficients():
    coeffs = data.GAMMA_EXPANSIONS["E8"]["g15"]
    assert len(coeffs) == 23
    assert coeffs["131426543876542"] == 58
    assert coeffs["765423143876542"] == 157


@pytest.mark.parametrize("kind", ["E6", "E7", "E8"])
def test_stated_words_are_reduced_except_the_known_misprint(kind):
    rs = root_system(kind)
    bad = []
    for name, terms in data.GAMMA_EXPANSIONS[kind].items():
        for w in terms:
            if length(rs, w) != len(w) or len(w) != data.GAMMA_DEGREES[kind][name]:
                bad.append((name, w))
    for w, _ in data.INVERSE_GAMMA_FORMS[kind] + data.INVERSE_DELTA_FORMS[kind]:
        if length(rs, w) != len(w):
            bad.append(("inverse", w))
    assert bad == ([("g10", "15438765432")] if kind == "E8" else [])


@pytest.mark.parametrize("kind", ["E6", "E7", "E8"])
def test_nj_degrees_are_basic_degrees(kind):
    assert sorted(data.NJ_TABLE[kind]) == list(INVARIANT_DEGREES[kind])


def test_nj_extremes():
    assert data.nj_value("E6", 2) == -48
    assert data.nj_value("E8", 30) == 2 ** 37 * 3 ** 4 * 5 ** 5 * 7 * 11 * 13 * 61


def test_corrections_are_separate_from_verbatim_data():
    assert "15438765432" in data.GAMMA_EXPANSIONS["E8"]["g10"]
    assert dict(data.ALT_IDENTITIES["E6"])["r5"] == "-rho5 + t*rho4"
    assert "- 4*g3*g5" in dict(data.Y_IN_GAMMA["E8"])["y9"]
