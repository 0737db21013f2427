import itertools

import pytest

from subint import invmod as IM
from subint import pic as P
from subint.corpus import find
from subint.errors import BadWitness, CertificateFailure
from subint.poly import Poly


def test_elementary_witness_is_invertible_and_not_principal():
    E = find("cusp")
    t = Poly.t(E.field)
    I = IM.elementary_witness(E, t)
    J = IM.inv_inverse(I)
    assert IM.inv_mul(I, J).is_unit_module()
    assert not I.is_unit_module()
    # X -> 0 lands on the unit module of I(A, B)
    assert IM.specialize_zero(I).is_unit_module()


def test_elementary_witness_rejects_bad_b():
    E = find("node")
    t = Poly.t(E.field)
    with pytest.raises(BadWitness):
        IM.elementary_witness(E, t)


def test_certificate_failure_detected():
    E = find("cusp")
    ctx = IM.context_for(E)
    t = Poly.t(E.field)
    with pytest.raises(CertificateFailure):
        IM.InvModule(ctx, [t], [t], [(0, 0, Poly.const(E.field, 1))]).verify()


@pytest.mark.parametrize("name", ["cusp", "node", "dual-numbers", "conjugate-gluing",
                                  "mixed-low"])
def test_enumerated_classes_match_i_group(name):
    E = find(name)
    classes = IM.enumerate_classes(E)
    assert len(classes) == P.i_group(E).order()
    for I, J in itertools.combinations(classes, 2):
        assert not IM.inv_equal(I, J)


@pytest.mark.parametrize("name", ["cusp", "dual-numbers"])
def test_classes_form_a_group(name):
    E = find(name)
    classes = IM.enumerate_classes(E)
    for I, J in itertools.product(classes, repeat=2):
        K = IM.inv_mul(I, J)
        assert sum(IM.inv_equal(K, L) for L in classes) == 1
    for I in classes:
        assert IM.inv_mul(I, IM.inv_inverse(I)).is_unit_module()


def test_phi_surjective_on_chain():
    high, whole = find("chain-high"), find("chain")
    v = IM.phi_surjective(whole, high)
    assert v.surjective and v.hypothesis == "C is subintegral over A"
    assert (v.classes_source, v.classes_target) == (8, 2)


def test_phi_onto_upper_half_of_mixed():
    v = IM.phi_surjective(find("mixed"), find("mixed-high"))
    assert v.surjective and (v.classes_source, v.classes_target) == (20, 4)


@pytest.mark.parametrize("name", ["cusp", "dual-numbers", "node"])
def test_theta_maps(name):
    rep = IM.theta_maps(find(name), 2)
    assert rep.commutes and all(rep.injective.values())
    assert rep.ok
