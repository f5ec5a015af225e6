"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python twin of the kernels is
selected at import time), so a failed Cython build is downgraded to a warning.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/axial/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    sys.stderr.write(f"axial: skipping compiled kernels ({exc}); pure-Python fallback will be used\n")

setup(ext_modules=ext_modules)
