import os

from setuptools import setup

ext_modules = []
if os.environ.get("BTHARM_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/btharm/kernels/_ops_c.pyx"], language_level=3
        )
    except ImportError:
        # pure-Python fallback is selected at import time
        pass

setup(ext_modules=ext_modules)
