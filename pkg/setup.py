"""Build the optional compiled enumeration kernel.

If Cython or a C compiler is unavailable the package installs without it
and ``intcyc.backend`` falls back to the pure-Python kernel.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("intcyc._enum", ["src/intcyc/_enum.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
