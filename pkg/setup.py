"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python twin is selected at
import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("gfree._speedups", ["src/gfree/_speedups.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover
    print(f"skipping compiled kernel ({exc}); using pure-Python fallback")

setup(ext_modules=ext_modules)
