"""Build script: compiles the optional fast kernels when Cython is available.

The package is fully functional without the extension; czorb._kernels falls
back to the pure-Python implementations at import time.
"""

import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "czorb._kernels._speedups",
                ["src/czorb/_kernels/_speedups.pyx"],
                # keep float results aligned with the pure-Python fallback
                extra_compile_args=["-ffp-contract=off"],
            )
        ],
        language_level=3,
    )
except ImportError:
    print("czorb: Cython not found, building without compiled kernels", file=sys.stderr)

setup(ext_modules=ext_modules)
