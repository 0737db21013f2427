"""Subintegrality, seminormality and relative Picard groups for curve orders and
finite-dimensional algebras."""
__version__ = "0.1.0"

from .kernels import BACKEND  # noqa: E402,F401  "cython" or "python"
