import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("LEXARITH_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("lexarith._kernel", ["src/lexarith/_kernel.pyx"])],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
            },
        )
    except ImportError:
        # No Cython at build time: install runs on the pure-Python kernel.
        ext_modules = []

setup(ext_modules=ext_modules)
