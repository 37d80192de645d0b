"""Extension build: the integer-polynomial kernels compile with Cython when
available; the package falls back to the pure-Python twin otherwise."""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("pseudolin._kernel._zkernel",
                   ["src/pseudolin/_kernel/_zkernel.pyx"],
                   optional=True)],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
