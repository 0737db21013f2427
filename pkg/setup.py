"""Optional Cython build of ``subint._ckernels``; the package works without it."""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SUBINT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("subint._ckernels", ["src/subint/_ckernels.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
