"""Build script: compiles the Jacobi sweep kernel when Cython is available.

The package works without the extension (a pure-Python kernel is selected at
import time), so a failed compile only costs speed. Set PSOMBOR_SKIP_EXT=1 to
skip the extension build entirely.
"""

import os

from setuptools import setup

extensions = []
cmdclass = {}

if not os.environ.get("PSOMBOR_SKIP_EXT"):
    try:
        from setuptools import Extension
        from setuptools.command.build_ext import build_ext
        from Cython.Build import cythonize

        class OptionalBuildExt(build_ext):
            """Degrade to the pure-Python kernel if compilation fails."""

            def run(self):
                try:
                    super().run()
                except Exception as exc:  # compiler missing, etc.
                    print(f"warning: extension build failed ({exc}); "
                          "falling back to the pure-Python kernel")

            def build_extension(self, ext):
                try:
                    super().build_extension(ext)
                except Exception as exc:
                    print(f"warning: building {ext.name} failed ({exc}); "
                          "falling back to the pure-Python kernel")

        extensions = cythonize(
            [Extension("psombor._kernels", ["src/psombor/_kernels.pyx"])],
            language_level=3,
        )
        cmdclass["build_ext"] = OptionalBuildExt
    except ImportError:
        print("warning: Cython not available; using the pure-Python kernel")

setup(ext_modules=extensions, cmdclass=cmdclass)
