"""Build script for the optional compiled kernels.

The extension is optional: if Cython or a C compiler is missing, the package
installs without it and ``hellygap.kernels`` falls back to pure Python.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("HELLYGAP_NO_EXT"):
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "hellygap._ckernels",
                    ["src/hellygap/_ckernels.pyx"],
                    include_dirs=[np.get_include()],
                    language="c++",
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "initializedcheck": False,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
