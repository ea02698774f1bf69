"""Build the optional compiled kernel.

The package works without it: ``polyoideal.kernel`` falls back to the
pure-Python implementation when the extension is missing. Set
``POLYOIDEAL_NO_EXT=1`` to skip compiling.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("POLYOIDEAL_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            ["src/polyoideal/_ckernel.pyx"],
            compiler_directives={"language_level": 3},
            quiet=True,
        )

setup(ext_modules=ext_modules)
