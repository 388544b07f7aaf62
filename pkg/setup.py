"""Builds the optional compiled eigensolver kernel.

The package works without the extension: rittcalc.backend falls back to the
pure NumPy implementation of the same algorithm when the compiled module is
missing (or when RITTCALC_PURE=1).
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    import numpy

    ext_modules = cythonize(
        [
            Extension(
                "rittcalc._eigen_cy",
                ["src/rittcalc/_eigen_cy.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
