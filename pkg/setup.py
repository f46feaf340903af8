"""Build script.

The package is pure Python; the one extension module is an optional
compiled twin of ``cflat.zlinalg._kernel_py`` (the exact integer
elimination kernels).  If Cython or a C compiler is unavailable the
build silently falls back to the pure interpreter version -- the import
logic in ``cflat.zlinalg.backend`` picks whichever is present.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a soft warning, not an error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            warnings.warn(f"compiled kernel skipped: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled kernel {ext.name} skipped: {exc}")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "cflat.zlinalg._kernel_c",
        sources=["src/cflat/zlinalg/_kernel_c.pyx"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
