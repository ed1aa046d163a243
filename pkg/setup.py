"""Builds the optional compiled Jacobi kernel.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed compile is tolerated rather than fatal.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("bhent._jacobi_fast", ["src/bhent/_jacobi_fast.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
