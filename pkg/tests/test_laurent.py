import random

import pytest

from subint.algebra import poly_quotient, split_algebra, units
from subint.errors import NotAUnit, TruncationOverflow
from subint.laurent import (LaurentPoly, TruncatedExtension, is_laurent_unit,
                            laurent_inverse_solve, laurent_unit_decompose)
from subint.poly import Poly
from subint.scalars import GF


@pytest.fixture
def dual():
    F = GF(2)
    return poly_quotient(F, Poly.t(F) ** 2, "b")


@pytest.mark.parametrize("d", [1, 2])
def test_decomposition_reassembles(dual, d):
    W = TruncatedExtension(dual, d)
    for u in W.units():
        dec = laurent_unit_decompose(u)
        assert dec.product() == u
        assert laurent_inverse_solve(u, 4 * d) is not None


def _sample_algebras():
    F2, F3 = GF(2), GF(3)
    return [poly_quotient(F2, Poly.t(F2) ** 2, "b"), poly_quotient(F3, Poly.t(F3) ** 3, "b"),
            split_algebra(F3, 2)]


def _random_unit(R, d, rng):
    """``a X^e (1 + sum n_k X^k) (1 + sum m_k X^-k)`` with ``e`` chosen per component."""
    nil = [x for x in R.elements() if R.is_zero(R.power(x, R.dim))]
    a = rng.choice(units(R))
    u = LaurentPoly.monomial(R, 0, a)
    for e in R.primitive_idempotents:
        k = rng.randint(-1, 1)
        rest = R.sub(R.unity, e)
        u = u * (LaurentPoly.monomial(R, k, e) + LaurentPoly.monomial(R, 0, rest))
    span = max(1, (d - 1) // 2)
    plus = LaurentPoly.from_list(R, [R.unity] + [rng.choice(nil) for _ in range(span)])
    minus = LaurentPoly.from_list(R, [rng.choice(nil) for _ in range(span)] + [R.unity], -span)
    return u * plus * minus


@pytest.mark.parametrize("d", [3, 4])
@pytest.mark.parametrize("R", _sample_algebras(), ids=["F2[b]/b2", "F3[b]/b3", "F3xF3"])
def test_decomposition_sampled(R, d):
    rng = random.Random(1000 + d)
    W = TruncatedExtension(R, d)
    for _ in range(60):
        u = _random_unit(R, d, rng)
        assert W.contains(u) and is_laurent_unit(u)
        dec = laurent_unit_decompose(u)
        assert dec.product() == u
        assert laurent_inverse_solve(u, 8 * d) is not None


def test_non_unit(dual):
    u = LaurentPoly.from_list(dual, [(1, 0), (1, 0)])  # 1 + X
    with pytest.raises(NotAUnit):
        laurent_unit_decompose(u)


def test_unit_count_formula(dual):
    for d in (1, 2):
        W = TruncatedExtension(dual, d)
        assert len(W.units()) == W.unit_count_formula()


def test_split_components_move_separately():
    F = GF(3)
    S = split_algebra(F, 2)
    e0, e1 = S.primitive_idempotents
    u = LaurentPoly.monomial(S, 1, e0) + LaurentPoly.monomial(S, -2, e1)
    assert laurent_unit_decompose(u).exponents in ([1, -2], [-2, 1])


def test_window_overflow(dual):
    W = TruncatedExtension(dual, 1)
    X = LaurentPoly.monomial(dual, 1, dual.unity)
    with pytest.raises(TruncationOverflow):
        W.mul(X, X)
