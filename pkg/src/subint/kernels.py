"""Select the compiled kernels when built, else the pure-Python fallback.

Set ``SUBINT_PURE_PYTHON=1`` to force the fallback.
"""
import os

BACKEND = "python"
if not os.environ.get("SUBINT_PURE_PYTHON"):
    try:
        from ._ckernels import AlgebraKernel, poly_mul_mod, rref_mod  # noqa: F401

        BACKEND = "cython"
    except ImportError:
        pass
if BACKEND == "python":
    from ._pykernels import AlgebraKernel, poly_mul_mod, rref_mod  # noqa: F401
