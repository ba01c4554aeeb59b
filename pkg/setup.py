"""Build the optional compiled kernel.

Without Cython (or a compiler) the package still installs and uses the
pure-Python kernel.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("cordal._ckernel", ["src/cordal/_ckernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
