import pytest

from subint import pic as P
from subint.corpus import find
from subint.errors import SubintError
from subint.groups import GroupExpr
from subint.poly import Poly

FINITE = ["cusp", "node", "conjugate-gluing", "mixed-low", "mixed2", "dual-numbers",
          "split-quadratic", "full-ring"]


@pytest.mark.parametrize("name", FINITE)
@pytest.mark.parametrize("d", [1, 2])
def test_mi_routes_agree(name, d):
    routes = P.mi_routes(find(name), d)
    assert isinstance(routes["E"], GroupExpr), routes["E"]
    assert routes["H"] == routes["Q"] == routes["E"]


@pytest.mark.parametrize("name", ["dual-numbers", "split-quadratic"])
def test_finite_pairs_against_enumeration(name):
    E = find(name)
    for d in (1, 2, 3):
        assert P.mi_group(E, d) == P.mi_enumerated(E.phi, d)


def test_cusp_mi_grows_with_truncation():
    E = find("cusp")
    assert [P.mi_group(E, d).render() for d in (1, 2, 3)] == [
        "Z/2 x Z/2", "Z/2 x Z/2 x Z/2 x Z/2", "Z/2 x Z/2 x Z/2 x Z/2 x Z/2 x Z/2"]


def test_pic_of_corpus_rings():
    assert P.pic(find("cusp.A")).render() == "Z/2"
    assert P.pic(find("node.A")).render() == "Z/2"
    assert P.pic(find("conjugate.A")).render() == "Z/3"
    assert P.pic(find("full.B")).is_trivial()


@pytest.mark.parametrize("stem", ["cusp", "node", "conjugate", "mixed"])
def test_mpic_decomposition(stem):
    A = find(f"{stem}.A")
    for d in (1, 2):
        assert P.mpic(A, d) == P.npic(A, d) * 2 + P.lpic(A, d)


def test_pic_laurent_splits():
    A = find("cusp.A")
    for d in (1, 2):
        assert P.pic_laurent(A, d) == P.pic(A) + P.mpic(A, d)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_mu_splits_into_nu_and_h0(d):
    D = find("dual-numbers").B
    assert P.mu(D, d) == P.nu(D, d) * 2 + P.h0(D)


def test_node_mi_is_free():
    g = P.mi_group(find("node"), 2)
    assert g.free_rank == 1 and g.is_torsion_free()


def test_quotient_transfer():
    assert P.quotient_transfer(find("cusp"), None, 2).isomorphic
    v = P.quotient_transfer(find("cusp"), "conductor", 2)
    assert v.isomorphic and v.right.render() == "Z/2 x Z/2 x Z/2 x Z/2"
    t = Poly.t(find("node").field)
    v = P.quotient_transfer(find("node"), t * t - t, 2)
    assert v.isomorphic


def test_mi_polynomial_extension():
    E = find("cusp")
    for dT in (1, 2):
        g = P.mi_polynomial_extension(E, 2, dT)
        assert g.is_finite() and g.is_trivial() is False


def test_enumeration_cutoff_refuses():
    with pytest.raises(SubintError) as exc:
        P.mi_group(find("chain"), 3, route="E", cutoff=10)
    assert exc.value.exit_code == 3
