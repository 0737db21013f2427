import pytest

from subint.suites import FAIL, PASS, SKIP, SUITES, run_suite


@pytest.mark.parametrize("name", list(SUITES))
def test_suite_passes(name):
    rep = run_suite(name)
    assert rep.ok, rep.render()
    assert rep.rows
    assert all(r.status != FAIL for r in rep.rows)


def test_suite_names_case_insensitive():
    assert run_suite("LEMMA2.1").name == "lemma2.1"
    with pytest.raises(KeyError):
        run_suite("theorem-of-everything")


def test_single_truncation():
    rep = run_suite("cor2.11", truncs=[1])
    assert {r.d for r in rep.rows} <= {1, None}


def test_report_serialises():
    d = run_suite("prop3.5").to_dict()
    assert d["ok"] and d["suite"] == "prop3.5"
    assert {r["status"] for r in d["rows"]} <= {PASS, SKIP}
