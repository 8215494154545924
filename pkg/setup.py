"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time), so the build degrades gracefully when Cython is unavailable.
Set COMERALG_NO_EXTENSION=1 to skip the compiled kernels entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("COMERALG_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "comeralg._ckernels",
                    ["src/comeralg/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level="3",
        )

setup(ext_modules=ext_modules)
