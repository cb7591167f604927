"""Build hook: compile the canonical-labeling kernel when Cython is available.

The package works without the extension; checkersurf.kernel falls back to
the pure-Python twin at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "checkersurf._kernel",
                ["src/checkersurf/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
