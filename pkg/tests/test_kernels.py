import random

import pytest

from subint import _pykernels as py
from subint import kernels

cy = pytest.importorskip("subint._ckernels")


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("seed", range(5))
def test_compiled_matches_fallback(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 3, 5, 7])
    rows = [[rng.randrange(-9, 9) for _ in range(7)] for _ in range(rng.randint(1, 8))]
    assert cy.rref_mod(rows, p) == py.rref_mod(rows, p)
    a = [rng.randrange(p) for _ in range(rng.randint(0, 9))]
    b = [rng.randrange(p) for _ in range(rng.randint(0, 9))]
    assert cy.poly_mul_mod(a, b, p) == py.poly_mul_mod(a, b, p)
    dim = 4
    flat = [rng.randrange(p) for _ in range(dim ** 3)]
    x = [rng.randrange(p) for _ in range(dim)]
    y = [rng.randrange(p) for _ in range(dim)]
    assert list(cy.AlgebraKernel(flat, dim, p).mul(x, y)) == list(py.AlgebraKernel(flat, dim, p).mul(x, y))
