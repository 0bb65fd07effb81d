"""Build hook: compiles the fraction-free row-reduction kernel when Cython
is available; the package falls back to the pure-Python kernel otherwise."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/cdga/_core/_rref_cy.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
