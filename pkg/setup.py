"""Build script: compiles the optional Cython elimination kernels.

The package is fully functional without the extension (a numpy fallback with
identical entry points is selected at import time), so a failed compilation
downgrades to a warning rather than aborting the install.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "stmodcat.ff._gfcore",
                ["src/stmodcat/ff/_gfcore.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - environment dependent
    print(f"warning: building without compiled kernels ({exc})", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
