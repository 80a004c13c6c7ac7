"""Build hook for the optional compiled Jacobi kernel.

The package works without the extension (a pure-Python kernel is selected at
import time), so any failure to cythonize or compile is non-fatal.  Set
SYNCBOUND_NO_EXTENSION=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SYNCBOUND_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("syncbound._speckernel", ["src/syncbound/_speckernel.pyx"])],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
