"""Build hook: compile the fast kernel when a toolchain is available.

The package works without the extension (a pure-Python kernel is selected at
import time), so a missing compiler or Cython must not fail the install.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    # degrade to the pure kernel instead of failing the whole install
    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: fast kernel not built ({exc}); pure kernel will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: {ext.name} not built ({exc}); pure kernel will be used")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - toolchain dependent
        return []
    return cythonize(
        [
            Extension(
                "idealis._kernel._fast",
                ["src/idealis/_kernel/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
