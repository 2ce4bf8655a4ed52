"""Build script.

The package is pure Python except for one optional Cython extension,
triwidth._kernels._fast, holding the two exponential-time search kernels
(carving-width partition DP and treewidth elimination DP).  If Cython or a
C compiler is missing the build silently falls back to the pure-Python
kernels in triwidth._kernels.pure; everything still works, just slower on
graphs near the size limits.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("TRIWIDTH_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "triwidth._kernels._fast",
                    ["src/triwidth/_kernels/_fast.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": 3},
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
