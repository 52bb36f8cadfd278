"""Build the optional compiled kernels.

If Cython or a C compiler is unavailable the package installs without the
extension and falls back to the pure-Python kernels at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/termfan/_ckernels.pyx"],
        language_level=3,
        quiet=True,
    )
    for ext in ext_modules:
        # a failed C build is skipped rather than aborting the install
        ext.optional = True
except Exception:  # pragma: no cover - build environment dependent
    ext_modules = []

setup(ext_modules=ext_modules)
