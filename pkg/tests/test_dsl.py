import pytest

from subint.corpus import SCRIPTS, script_text
from subint.dsl import eval_poly, parse, parse_condition, render
from subint.errors import DuplicateName, ParseError, UndefinedName
from subint.poly import Poly
from subint.scalars import GF
from subint.workspace import Workspace

SMALL = """\
# a cusp
field F2
ring A = subalgebra(t^2, t^3)
ring B = poly(t)
extension cusp = A in B
check subintegral cusp --expect true
compute mi cusp --trunc 2
compute sequence m-complex cusp
"""


def test_parse_small_script():
    s = parse(SMALL)
    assert s.field == "F2"
    assert [r.name for r in s.rings] == ["A", "B"]
    assert s.extensions[0].sub == "A" and s.extensions[0].sup == "B"
    verbs = [(d.verb, d.what) for d in s.directives]
    assert verbs == [("check", "subintegral"), ("compute", "mi"), ("compute", "sequence")]
    assert s.directives[1].trunc == 2
    assert s.directives[0].option("expect") == "true"
    assert s.directives[2].kind == "m-complex"


@pytest.mark.parametrize("stem", SCRIPTS)
def test_round_trip(stem):
    s = parse(script_text(stem))
    assert parse(render(s)) == s


@pytest.mark.parametrize("text, line, col", [
    ("", 1, 1),
    ("ring A = poly(t)\n", 1, 1),
    ("field F2\nring A = blob(t)\n", 2, 10),
    ("field F2\nring A = poly(t)\ncheck sideways A\n", 3, 7),
    ("field F2\nring A = poly(t)\ncompute mi A --trunc 0\n", 3, 22),
    ("field F2\nring A = subalgebra(t^2, t^3\n", 2, 20),
    ("field F2\nring A = poly(t) $\n", 2, 18),
])
def test_parse_errors_carry_position(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert (exc.value.line, exc.value.col) == (line, col)
    assert str(exc.value).startswith(f"line {line}, col {col}:")


def test_names_must_be_defined_once():
    with pytest.raises(DuplicateName) as exc:
        parse("field F2\nring A = poly(t)\nring A = poly(t)\n")
    assert exc.value.line == 3
    with pytest.raises(UndefinedName) as exc:
        parse("field F2\nring A = poly(t)\nextension e = A in Z\n")
    assert exc.value.line == 3
    assert exc.value.exit_code == 2


def test_hyphenated_names_and_arithmetic():
    s = parse("field F3\nring node-A = subalgebra(t^2 - t, t^3 - t^2)\n"
              "ring B = poly(t)\nextension node-a.x = node-A in B\n")
    assert s.extensions[0].name == "node-a.x"
    assert s.rings[0].args == ("t^2-t", "t^3-t^2")


def test_eval_poly():
    F = GF(5)
    p, var = eval_poly("(t+1)^2 - 2t/2", F)
    t = Poly.t(F)
    assert var == "t" and p == t * t + t + 1
    p, var = eval_poly("b^2", F, None)
    assert var == "b"
    with pytest.raises(ValueError):
        eval_poly("t/t", F)


def test_conditions():
    F = GF(5)
    t = Poly.t(F)
    c = parse_condition("f(0)=f(1)", F)
    assert c.holds(F, t * t - t) and not c.holds(F, t)
    assert parse_condition("f'(2)=0", F).holds(F, (t - 2) ** 2)
    with pytest.raises(ValueError):
        parse_condition("f(0)>f(1)", F)


def test_workspace_runs_script():
    res = Workspace.from_text(SMALL).run()
    assert [r.ok for r in res] == [True, None, True]
    assert res[1].value == "Z/2 x Z/2 x Z/2 x Z/2"


def test_field_override():
    s = parse(SMALL).with_field("F3")
    assert s.field == "F3" and parse(render(s)) == s
