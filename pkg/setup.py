"""Build script: compiles the probing kernels as a C extension when possible.

The extension is optional. If Cython or a C compiler is unavailable the
package installs anyway and falls back to the pure-Python kernels at import
time (see hidden_topk/kernels/__init__.py).
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class optional_build_ext(build_ext):
    """Skip the extension (with a warning) instead of failing the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: building the C probing kernels failed ({exc}); "
            "hidden-topk will use the pure-Python fallback.",
            file=sys.stderr,
        )


extensions = [
    Extension(
        "hidden_topk.kernels._ckernels",
        ["src/hidden_topk/kernels/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

if cythonize is not None:
    ext_modules = cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
