import json
import subprocess
import sys

import pytest

from subint.cli import main

BAD = """\
field F2
ring A = subalgebra(t^2, t^3)
ring B = poly(t)
extension cusp = A in B
check closed cusp --expect true
"""


def _run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_passes(capsys):
    code, out, _ = _run(["check", "subintegral", "cusp"], capsys)
    assert code == 0
    assert "subintegral cusp: true" in out and out.rstrip().endswith("status: pass")


def test_compute_group(capsys):
    code, out, _ = _run(["compute", "mi", "cusp", "--trunc", "1"], capsys)
    assert code == 0 and "Z/2 x Z/2" in out


def test_compute_ring_by_stem(capsys):
    code, out, _ = _run(["compute", "pic", "conjugate.A"], capsys)
    assert code == 0 and "Z/3" in out


def test_failed_expectation_exits_1(tmp_path, capsys):
    f = tmp_path / "bad.sub"
    f.write_text(BAD)
    code, out, _ = _run(["run", str(f)], capsys)
    assert code == 1 and "[FAIL]" in out


def test_parse_error_exits_2(tmp_path, capsys):
    f = tmp_path / "broken.sub"
    f.write_text("field F2\nring A = blob(t)\n")
    code, _, err = _run(["run", str(f)], capsys)
    assert code == 2 and "line 2" in err


def test_unknown_object_exits_2(capsys):
    code, _, err = _run(["compute", "mi", "nowhere"], capsys)
    assert code == 2 and "unknown object" in err


def test_mixed_scripts_rejected(capsys):
    code, _, _ = _run(["map", "phi", "cusp.A", "node.A", "cusp.B"], capsys)
    assert code == 2


def test_bad_trunc_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "mi", "cusp", "--trunc", "0"])
    assert exc.value.code == 2


def test_refused_exits_3(capsys):
    code, out, _ = _run(["compute", "mi", "chain", "--route", "E", "--trunc", "3",
                         "--cutoff", "10"], capsys)
    assert code == 3 and "[refused]" in out


def test_q_search_refused(tmp_path, capsys):
    f = tmp_path / "q.sub"
    f.write_text("field Q\nring A = subalgebra(t^2 - t, t^3 - t^2)\nring B = poly(t)\n"
                 "extension n = A in B\ncheck anodal n\n")
    code, out, _ = _run(["run", str(f)], capsys)
    assert code == 3


def test_structured_report(capsys):
    code, out, _ = _run(["compute", "mi", "dual-numbers", "--report", "structured"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "pass"
    assert doc["results"][0]["value"] == "Z/2 x Z/2 x Z/2 x Z/2"
    assert doc["meta"]["argv"][:2] == ["compute", "mi"]


def test_map_all(capsys):
    code, out, _ = _run(["map", "phi", "A", "C", "B", "--script",
                         _script("chain"), "--all"], capsys)
    assert code == 0 and "8 -> 2 classes" in out and out.count(" -> <") == 8


def test_sequence(capsys):
    code, out, _ = _run(["compute", "sequence", "prop3.7", "chain-low", "chain", "chain-high"],
                        capsys)
    assert code == 0 and "I(A,B): exact" in out


def test_field_override(capsys):
    code, out, _ = _run(["compute", "pic", "cusp.A", "--field", "F3"], capsys)
    assert code == 0 and "Z/3" in out


def test_suite_and_corpus(capsys):
    assert _run(["suite", "lemmaLP"], capsys)[0] == 0
    code, out, _ = _run(["corpus", "--verify"], capsys)
    assert code == 0 and "[FAIL]" not in out


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "subint.cli", "check", "closed", "node"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and "closed node: true" in r.stdout


def _script(stem):
    from importlib import resources

    return str(resources.files("subint").joinpath("scripts").joinpath(f"{stem}.sub"))
