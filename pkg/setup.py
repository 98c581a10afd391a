"""Build script for the optional compiled elimination core.

The package is fully functional without the extension; `apolarity.linalg`
falls back to a vectorized numpy implementation when the import fails.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Try to build the accelerator, but never fail the install over it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn(f"compiled core skipped: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled core {ext.name} skipped: {exc}")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("apolarity._modp_core", ["src/apolarity/_modp_core.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
