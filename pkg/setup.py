"""Builds the compiled order-decision kernel.

The extension is optional: when Cython or a C compiler is unavailable the
package installs pure-Python and selects the fallback kernel at import.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/doctrines/_core.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
