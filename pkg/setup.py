"""Builds the optional compiled closure kernel.

The package is pure Python by default; if Cython and a C compiler are
available, the transitive-closure kernel is compiled for speed. A failed
extension build is non-fatal -- the pure-Python kernel is selected at
import time instead.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "skoo._closure",
                ["src/skoo/_closure.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
