import pytest
from hypothesis import given, strategies as st

from subint.errors import InexpressibleCokernel
from subint.groups import (GroupExpr, extension, invariant_factors, lattice_cokernel,
                           parse_group, smith_normal_form, snf_diagonal)
from subint.scalars import GF, QQ


def test_invariant_factors():
    assert invariant_factors([2, 3]) == (6,)
    assert invariant_factors([4, 2, 2]) == (2, 2, 4)


@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=1, max_size=4))
def test_snf_is_an_equivalence(M):
    D, U, V = smith_normal_form(M)
    n, m = len(M), len(M[0])
    UMV = [[sum(U[i][k] * M[k][l] * V[l][j] for k in range(n) for l in range(m))
            for j in range(m)] for i in range(n)]
    assert UMV == D
    diag = [d for d in snf_diagonal(M) if d]
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))


def test_cokernel():
    assert lattice_cokernel([[2, 0], [0, 3]], 2) == GroupExpr(torsion=(6,))
    assert lattice_cokernel([[1, 1]], 1) == GroupExpr()
    assert lattice_cokernel([], 2) == GroupExpr.Z(2)


def test_ga_gm_fold_over_finite_fields():
    assert GroupExpr(ga_rank=2, field=GF(3)) == GroupExpr(torsion=(3, 3))
    assert GroupExpr(gm_rank=1, field=GF(5)).render() == "Z/4"
    g = GroupExpr(ga_rank=1, gm_rank=1, field=QQ)
    assert g.render() == "Ga(Q)^1 x Gm(Q)^1"
    assert not g.is_torsion_free()


@pytest.mark.parametrize("text", ["0", "Z^1", "Z^2 x Z/2 x Z/4", "Ga(Q)^3"])
def test_render_roundtrip(text):
    assert parse_group(text).render() == text


def test_cancel_and_extension():
    G = GroupExpr(1, (2, 4))
    assert G.cancel(GroupExpr(torsion=(2,))) == GroupExpr(1, (4,))
    with pytest.raises(InexpressibleCokernel):
        G.cancel(GroupExpr(torsion=(8,)))
    assert extension(GroupExpr(torsion=(2,)), GroupExpr.Z(1)) == GroupExpr(1, (2,))
    assert extension(GroupExpr(torsion=(2,)), GroupExpr(torsion=(3,))) == GroupExpr(torsion=(6,))
    with pytest.raises(InexpressibleCokernel):
        extension(GroupExpr(torsion=(2,)), GroupExpr(torsion=(2,)))
