"""Build script for the compiled backend extension.

The package works without the extension (a NumPy fallback is selected at
import time), but the Cython core is built by default for speed.
"""

import numpy
from Cython.Build import cythonize
from setuptools import Extension, setup

ext = Extension(
    "wavearith._native",
    sources=["src/wavearith/_native.pyx"],
    include_dirs=[numpy.get_include()],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
)

setup(ext_modules=cythonize([ext], language_level="3"))
