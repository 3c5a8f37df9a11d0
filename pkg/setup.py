"""Build script: compiles the optional C extension for the hot kernels.

The extension is a speed-up only; if Cython or a C compiler is missing the
install still succeeds and the package transparently uses the pure-Python
kernels instead.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as non-fatal."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any failure means "no ext"
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"warning: building the compiled kernels failed ({exc}); "
              "falling back to the pure-Python kernels")


ext_modules = []
if not os.environ.get("HAUSNUM_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hausnum/_kernels/_fastcore.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("warning: Cython not available; installing pure-Python kernels only")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
