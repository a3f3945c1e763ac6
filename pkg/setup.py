"""Build hook for the optional compiled kernel extension.

The package is fully functional without the extension; the numpy fallback
in dirings.kernels._pykernels is selected automatically at import time.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/dirings/kernels/_ckernels.pyx"], language_level=3
    )
except Exception as exc:  # cython missing: install without the extension
    warnings.warn(f"compiled kernels skipped ({exc})")


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a warning, not an error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn(f"compiled kernels skipped ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled kernel {ext.name} skipped ({exc})")


setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
