import itertools

import pytest

from subint.curves import (ConditionOrder, CurveOrder, Extension, SpanOracle, deriv_equal, deriv_zero,
                           eval_equal, monomial_order, orders_equal, polynomial_ring,
                           quotient_by_conductor, span_membership_oracle)
from subint.errors import AlgebraError, NonBirational
from subint.poly import Poly
from subint.scalars import GF, QQ


def _orders():
    F2, F3, F5 = GF(2), GF(3), GF(5)
    t2, t3 = Poly.t(F2), Poly.t(F3)
    return [
        CurveOrder(F2, [t2**2, t2**3]),
        CurveOrder(F3, [t3**2 - t3, t3**3 - t3**2]),
        CurveOrder(F2, [t2**2 + t2 + 1, t2**3 + t2**2 + t2]),
        monomial_order(F2, [4, 5, 6, 7]),
        ConditionOrder(F5, [eval_equal(0, 1), deriv_zero(2)]),
        CurveOrder(QQ, [Poly.t(QQ) ** 2, Poly.t(QQ) ** 3 + Poly.t(QQ)]),
    ]


@pytest.mark.parametrize("A", _orders())
def test_sagbi_membership_matches_span_oracle(A):
    F = A.field
    oracle = SpanOracle(A)  # degree-12 products can miss cancellations from above
    elems = [F.coerce(c) for c in (0, 1, -1)]
    for n in range(13):
        for tail in itertools.product(elems, repeat=min(n, 2)):
            coeffs = [F.zero] * (n - len(tail)) + list(tail) + [F.one]
            f = Poly(F, coeffs)
            assert (f in A) == (f in oracle), f.render()


def test_conductors():
    cusp, node, conj, chain, mixed, _ = _orders()
    assert cusp.conductor_degree == 2
    assert node.conductor == Poly(GF(3), [0, 2, 1])  # t^2 - t
    assert conj.conductor_degree == 2
    assert chain.conductor_degree == 4
    assert mixed.conductor_degree == 4


def test_condition_and_generator_forms_agree():
    F = GF(3)
    t = Poly.t(F)
    assert orders_equal(ConditionOrder(F, [eval_equal(0, 1)]),
                        CurveOrder(F, [t**2 - t, t**3 - t**2]))


def test_membership_trace_replays():
    A = _orders()[0]
    t = Poly.t(A.field)
    f = t**5 + t**2
    m = A.member(f)
    assert m and A.replay(m) == f
    miss = A.member(t + t**4)
    assert not miss and miss.failed_degree == 1


def test_non_birational_rejected():
    F = GF(2)
    with pytest.raises(NonBirational):
        CurveOrder(F, [Poly.t(F) ** 2])


def test_non_subalgebra_conditions_rejected():
    with pytest.raises(AlgebraError):
        ConditionOrder(GF(5), [deriv_equal(0, 1)])
    F = GF(2)
    with pytest.raises(AlgebraError):
        Extension(polynomial_ring(F), CurveOrder(F, [Poly.t(F) ** 2, Poly.t(F) ** 3]))


def test_quotient_by_conductor_matches_frame():
    F = GF(2)
    t = Poly.t(F)
    E = Extension(CurveOrder(F, [t**2, t**3]), polynomial_ring(F))
    QA, QB, incl = quotient_by_conductor(E)
    assert (QA.dim, QB.dim) == (1, 2)
    assert span_membership_oracle(E.A, t**6 + t**3)
