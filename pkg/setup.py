"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (pure-Python kernels
are selected at import time), so any compilation failure is downgraded to
a warning instead of aborting the install.
"""

import os
import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.extension import Extension


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"skipping compiled kernels: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping compiled kernel {ext.name}: {exc}")


def extensions():
    if os.environ.get("COSETCHI_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "cosetchi.kernels._speedups",
        ["src/cosetchi/kernels/_speedups.pyx"],
    )
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
