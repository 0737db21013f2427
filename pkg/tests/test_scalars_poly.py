from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from subint.errors import DivisionByZero
from subint.poly import Poly, parse_poly
from subint.scalars import GF, QQ, field_from_name, parse_scalar

primes = st.sampled_from([2, 3, 5, 7, 101])


@given(primes, st.integers(), st.integers())
def test_prime_field_inverse(p, a, b):
    F = GF(p)
    a, b = F.coerce(a), F.coerce(b)
    if a:
        assert F.mul(a, F.inv(a)) == 1
    assert F.add(F.sub(a, b), b) == a


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GF(5).inv(0)
    with pytest.raises(DivisionByZero):
        QQ.inv(Fraction(0))


def test_field_names():
    assert field_from_name("F5") == GF(5)
    assert field_from_name("Q") is QQ
    with pytest.raises(ValueError):
        field_from_name("F4")


def test_scalar_parse():
    assert parse_scalar("3/4").render() == "3/4"


coeffs = st.lists(st.integers(0, 4), max_size=7)


@given(coeffs, coeffs)
def test_divmod_roundtrip(a, b):
    F = GF(5)
    A, B = Poly(F, a), Poly(F, b)
    if B.is_zero():
        return
    q, r = divmod(A, B)
    assert q * B + r == A
    assert r.is_zero() or r.degree < B.degree


@given(coeffs, coeffs, coeffs)
def test_ring_axioms(a, b, c):
    F = GF(5)
    A, B, C = Poly(F, a), Poly(F, b), Poly(F, c)
    assert A * (B + C) == A * B + A * C
    assert (A * B) * C == A * (B * C)


def test_parse_and_render():
    F = GF(7)
    p = parse_poly(F, "3*t^2 - t + 1")
    assert p.render() == "3*t^2 + 6*t + 1"
    assert parse_poly(QQ, "1/2*t").coeff(1) == Fraction(1, 2)


def test_derivative_and_gcdex():
    F = GF(3)
    t = Poly.t(F)
    f = t**3 - t
    assert f.derivative() == Poly.const(F, 2)  # 3t^2 - 1 with 3 = 0
    g, s, u = (t - 1).gcdex(t + 1)
    assert s * (t - 1) + u * (t + 1) == g
