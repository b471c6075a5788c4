"""Build script: compiles the optional exact-arithmetic pivot kernel.

The package is pure Python except for one Cython extension holding the
simplex row operations.  If Cython or a C compiler is unavailable the
install still succeeds and the package falls back to the pure-Python
kernel at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Let the extension build fail without failing the whole install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: speedup kernel not built ({exc}); "
                  "falling back to the pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to the pure-Python kernel")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("minproj._kernel._speedups",
                   ["src/minproj/_kernel/_speedups.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
