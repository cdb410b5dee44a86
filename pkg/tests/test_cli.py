import io
import json

import pytest

from echow.cli import execute


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = execute(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_weyl_coset_words():
    code, out, _ = run("weyl", "--group", "e6", "--coset", "2", "--max-len", "4")
    assert code == 0
    words = [w["word"] for w in json.loads(out)["words"] if w["length"] >= 3]
    assert words == ["342", "542", "1342", "3542", "6542"]


def test_roots():
    code, out, _ = run("roots", "--group", "e7")
    assert code == 0
    assert json.loads(out)["positive_roots"] == 63


def test_bgg_expression():
    code, out, _ = run("bgg", "--group", "e6", "--expr", "d4")
    payload = json.loads(out)
    assert code == 0
    assert {t["word"]: t["coeff"] for t in payload["terms"]} == \
        {"1342": "3", "3542": "6", "6542": "6"}


def test_exit_codes():
    assert run("bgg", "--group", "e6", "--expr", "t^13")[0] == 3
    assert run("bgg", "--group", "e6", "--expr", "t^13", "--cap", "13")[0] == 0
    assert run("bgg", "--group", "e9", "--expr", "t")[0] == 2
    assert run("nonsense")[0] == 2
    assert run("chow", "--group", "e6", "--mod-p", "4")[0] == 2
    assert run("verify-presentation", "--group", "e8", "--cap", "20")[0] == 3


def test_chow_mod_2_for_e8():
    code, out, err = run("chow", "--group", "e8", "--mod-p", "2")
    assert code == 0
    entry = json.loads(out)["mod_p"][0]
    assert entry["exceptional_degrees"] == [18, 20, 24, 30]
    assert "pass" in err


def test_verify_dictionary_e6():
    code, out, _ = run("verify-dictionary", "--group", "e6")
    assert code == 0
    assert json.loads(out)["passed"]


def test_failures_give_exit_one():
    code, out, err = run("verify-duan-zhao", "--group", "e6")
    assert code == 1
    assert "FAIL" in err


def test_output_is_deterministic_across_threads():
    a = run("verify-presentation", "--group", "e7", "--threads", "1")
    b = run("verify-presentation", "--group", "e7", "--threads", "3")
    assert a[1] == b[1]
    assert "seconds" not in a[1]


def test_timings_flag_adds_times():
    _, out, _ = run("verify-presentation", "--group", "e6", "--timings")
    assert "seconds" in out


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "echow.ini"
    cfg.write_text("[echow]\ngroup = e7\nformat = text\n")
    code, out, _ = run("roots", "--config", str(cfg))
    assert code == 0 and "E7" in out and not out.lstrip().startswith("{")
    code, out, _ = run("roots", "--config", str(cfg), "--group", "e6", "--format", "json")
    assert json.loads(out)["group"] == "E6"
    bad = tmp_path / "bad.ini"
    bad.write_text("[echow]\ncolour = blue\n")
    assert run("roots", "--config", str(bad))[0] == 2


def test_invariants_table_e6():
    code, out, _ = run("invariants-table", "--group", "e6")
    rows = json.loads(out)["nj_table"]
    assert code == 0
    assert [r["status"] for r in rows] == ["pass"] * 6
    assert rows[0]["n_j"] == "-48"


@pytest.mark.slow
def test_verify_all_e7():
    assert run("verify-all", "--group", "e7")[0] == 0
