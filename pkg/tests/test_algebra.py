import pytest

from subint.algebra import (FinDimAlgebra, algebra_from_table_text, base_algebra,
                            idempotent_decomposition, idempotents_bruteforce, nilradical_bruteforce,
                            nilradical_linear, poly_extension, poly_quotient, product_algebra,
                            split_algebra, unit_group, units)
from subint.errors import AlgebraError, NotAUnit
from subint.poly import Poly
from subint.scalars import GF, QQ


def _algebras(p):
    F = GF(p)
    t = Poly.t(F)
    return [base_algebra(F), split_algebra(F, 2), poly_quotient(F, t**2),
            poly_quotient(F, t**3 - t), poly_quotient(F, (t**2 + t + 1) * t**2),
            product_algebra(poly_quotient(F, t**2), split_algebra(F, 1))]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_nilradical_linear_matches_bruteforce(p):
    for A in _algebras(p):
        assert nilradical_linear(A) == nilradical_bruteforce(A)


@pytest.mark.parametrize("p", [2, 3])
def test_idempotents_match_bruteforce(p):
    for A in _algebras(p):
        assert sorted(idempotent_decomposition(A)) == sorted(idempotents_bruteforce(A))


def test_unit_counts():
    F = GF(2)
    t = Poly.t(F)
    D = poly_quotient(F, t**2)
    assert len(units(D)) == 2
    assert unit_group(D).group.render() == "Z/2"
    assert unit_group(poly_quotient(F, t**2 + t + 1)).group.render() == "Z/3"


def test_inverse_and_errors():
    F = GF(5)
    t = Poly.t(F)
    A = poly_quotient(F, t**2 - 1)
    x = (2, 1)
    assert A.mul(x, A.inverse(x)) == A.unity
    with pytest.raises(NotAUnit):
        A.inverse((1, 1))


def test_table_text_roundtrip():
    F = GF(3)
    A = poly_quotient(F, Poly.t(F) ** 2)
    B = algebra_from_table_text(F, A.to_table_text())
    assert B.table == A.table and B.unity == A.unity


def test_bad_table_rejected():
    with pytest.raises(AlgebraError):
        FinDimAlgebra(GF(2), [[[1, 0], [0, 1]], [[0, 1], [1, 1]]], [0, 1])


def test_rational_unit_group():
    t = Poly.t(QQ)
    g = unit_group(poly_quotient(QQ, t**2 * (t - 1))).group
    assert (g.gm_rank, g.ga_rank) == (2, 1)


def test_poly_extension_dimension():
    F = GF(2)
    D = poly_quotient(F, Poly.t(F) ** 2)
    assert poly_extension(D, 3).dim == 8
