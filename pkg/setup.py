from setuptools import Extension, setup
from Cython.Build import cythonize

# The compiled kernels are optional: the package falls back to the pure
# numpy implementation in qdouble._kernels_py if the build is unavailable.
ext_modules = cythonize(
    [
        Extension(
            "qdouble._kernels",
            sources=["src/qdouble/_kernels.pyx"],
            extra_compile_args=["-O3"],
            optional=True,
        )
    ],
    compiler_directives={"language_level": "3"},
)

setup(ext_modules=ext_modules)
