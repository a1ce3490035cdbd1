"""Build the optional compiled sweep kernel.

The package works without it (a pure-Python kernel with the same interface
is selected at import time); the extension makes the full-grid verification
sweeps roughly two orders of magnitude faster.
"""

from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "hyperhodge._fastcore",
        sources=["src/hyperhodge/_fastcore.pyx"],
        extra_compile_args=["-O2"],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
)
