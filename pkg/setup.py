import os

from setuptools import setup

ext_modules = []
if os.environ.get("TWISTFOLD_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("twistfold._kernel", ["src/twistfold/_kernel.pyx"], extra_compile_args=["-O2"])],
            language_level=3,
        )
    except ImportError:
        # Cython unavailable: the package falls back to the pure-Python closure
        ext_modules = []

setup(ext_modules=ext_modules)
