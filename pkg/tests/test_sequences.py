import pytest

from subint import sequences as S
from subint.corpus import find
from subint.curves import ConditionOrder, Extension, deriv_zero
from subint.errors import ExactnessFailure, HypothesisNotVerified
from subint.groups import GroupExpr


@pytest.mark.parametrize("name", ["cusp", "node", "dual-numbers", "mixed-low"])
def test_unitpic_exact(name):
    rep = S.sequence_report("unitpic", find(name))
    assert not rep.failures


@pytest.mark.parametrize("name", ["cusp", "node", "conjugate-gluing", "mixed", "dual-numbers",
                                  "split-quadratic"])
@pytest.mark.parametrize("kind", ["m-complex", "k-complex"])
def test_complexes_exact(name, kind):
    assert S.sequence_report(kind, find(name), d=2).exact


def test_chain_exact_on_chain():
    rep = S.sequence_report("prop3.7", find("chain-low"), find("chain"), find("chain-high"), d=2)
    assert rep.exact
    assert rep.nodes[1][1].order() == 4096
    assert {j.node for j in rep.junctions} >= {"I(A,C)", "I(A,B)", "I(C,B)"}


@pytest.mark.parametrize("name, d", [("mixed2", 2), ("mixed", 1)])
def test_closure_chain_exact(name, d):
    assert S.sequence_report("corlnew", find(name), d=d).exact


def test_non_subintegral_chain_is_not_checkable():
    E = find("mixed")
    C = ConditionOrder(E.field, [deriv_zero(2)])
    rep = S.chain_report(Extension(E.A, C), E, Extension(C, E.B), 2)
    assert not rep.exact and not rep.failures
    assert all(j.verdict == S.UNCHECKABLE for j in rep.junctions)


def test_mismatched_chain_rejected():
    with pytest.raises(HypothesisNotVerified):
        S.chain_report(find("cusp"), find("chain"), find("chain-high"), 2)


def test_strict_raises_on_failure():
    rep = S.SequenceReport("demo", [("X", GroupExpr.Z())], [])
    rep.add("X", False, "broken on purpose")
    with pytest.raises(ExactnessFailure, match="not exact at X"):
        S._finish(rep, True)
    assert S._finish(rep, False) is rep


def test_fits_extension():
    Z2 = GroupExpr.cyclic(2)
    assert S.fits_extension(Z2, Z2 + Z2, Z2)[0]
    assert not S.fits_extension(Z2, Z2, Z2)[0]
    assert not S.fits_extension(GroupExpr.Z(), Z2, GroupExpr())[0]


def test_report_serialises():
    rep = S.sequence_report("m-complex", find("cusp"), d=2)
    d = rep.to_dict()
    assert d["exact"] and d["d"] == 2
    assert rep.render().splitlines()[0] == rep.kind + " (d=2)"
