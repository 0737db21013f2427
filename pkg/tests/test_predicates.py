import pytest

import subint.predicates as PR
from subint.corpus import find
from subint.curves import CurveOrder, Extension, monomial_order, polynomial_ring
from subint.poly import Poly
from subint.scalars import GF, QQ


@pytest.mark.parametrize("name, sub, closed", [
    ("cusp", True, False),
    ("chain", True, False),
    ("mixed-low", True, False),
    ("node", False, True),
    ("split-quadratic", False, True),
    ("full-ring", False, True),
    ("dual-numbers", True, False),
])
def test_subintegral_and_closed(name, sub, closed):
    E = find(name)
    assert PR.is_subintegral(E).value is sub
    assert PR.is_subintegrally_closed(E).value is closed


def test_closure_trace_reaches_b():
    plus, trace = PR.subintegral_closure(find("chain"))
    assert [s for s in trace.render()] == ["C1 = C0[t^2]", "C2 = C1[t^3]", "C3 = C2[t]"]
    t = Poly.t(GF(2))
    assert t in plus


def test_elementary_witness_on_cusp():
    v = PR.is_elementary_subintegral(find("cusp"))
    assert v.value and v.witness == Poly.t(GF(2))


def test_seminormal():
    assert PR.is_seminormal(find("node.A")).value
    v = PR.is_seminormal(find("cusp.A"))
    assert not v.value
    assert [w.render() for w in v.witness] == ["t^2", "t^3"]


@pytest.mark.parametrize("gens", [(2, 3), (3, 4, 5), (2, 5), (3, 5, 7), (4, 5, 6, 7)])
def test_seminormal_matches_definitional_search(gens):
    A = monomial_order(GF(2), list(gens))
    assert PR.is_seminormal(A).value == PR.seminormal_oracle(A).value


def test_seminormal_finite_algebras():
    ws = find("dual-numbers")
    assert not PR.is_seminormal(ws.B).value
    assert PR.is_seminormal(find("split-quadratic").B).value


def _curve_cases():
    F2, F3 = GF(2), GF(3)
    t2, t3 = Poly.t(F2), Poly.t(F3)
    return [
        Extension(CurveOrder(F2, [t2**2, t2**3]), polynomial_ring(F2)),
        Extension(monomial_order(F2, [3, 4, 5]), polynomial_ring(F2)),
        Extension(CurveOrder(F3, [t3**2 - t3, t3**3 - t3**2]), polynomial_ring(F3)),
        Extension(CurveOrder(F2, [t2**2 + t2 + 1, t2**3 + t2**2 + t2]), polynomial_ring(F2)),
        Extension(CurveOrder(F2, [t2**2 - t2, t2**3 - t2**2]), polynomial_ring(F2)),
    ]


@pytest.mark.parametrize("E", _curve_cases())
def test_anodal_matches_raw_search(E):
    assert PR.is_anodal(E, exhaustive=True).value == PR.anodal_raw_oracle(E).value


def test_anodal_graded_shortcut_agrees():
    E = Extension(monomial_order(GF(3), [2, 3]), polynomial_ring(GF(3)))
    assert PR.is_anodal(E).method == "graded identity"
    assert PR.is_anodal(E, exhaustive=True).value is True


def test_node_not_anodal_with_idempotent_witness():
    E = find("node")
    v = PR.is_anodal(E)
    assert v.value is False
    b = v.witness
    assert b not in E.A and (b * b - b) in E.A and (b**3 - b * b) in E.A


def test_split_not_anodal():
    assert PR.is_anodal(find("split-quadratic")).value is False


def test_identity_certificate():
    cert = PR.anodal_identity_certificate()
    assert cert["verified"] and cert["expansion"] == "1"


def test_quasinormal():
    assert PR.is_quasinormal(find("dual-numbers"), 2).value is True
    assert PR.is_quasinormal(find("conjugate-gluing"), 2).value is True
    assert PR.is_quasinormal(find("cusp"), 2).value is False


def test_search_refused_over_q():
    from subint.errors import SubintError

    t = Poly.t(QQ)
    E = Extension(CurveOrder(QQ, [t**2 - t, t**3 - t**2]), polynomial_ring(QQ))
    with pytest.raises(SubintError) as exc:
        PR.is_anodal(E)
    assert exc.value.exit_code == 3


def test_graded_closure_matches_exhaustive():
    from subint.curves import orders_equal
    from subint.suites import random_monomial_pairs

    pairs = [E for E in random_monomial_pairs(50) if E.field.p == 2][:12]
    pairs.append(find("chain"))
    for E in pairs:
        fast, _ = PR.subintegral_closure(E)
        slow, trace = PR.subintegral_closure(E, exhaustive=True)
        assert trace.method == "exhaustive mod conductor"
        assert orders_equal(fast, slow), E.name
