"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python kernel is selected at
import time), so any build failure here degrades gracefully.  Set
MULTIGB_NO_EXT=1 to skip the extension on purpose.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MULTIGB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("multigb._speedups", ["src/multigb/_speedups.pyx"])],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
