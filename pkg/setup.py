import numpy
from setuptools import Extension, setup

setup(
    ext_modules=[
        Extension(
            "mwfloat._fmaext",
            ["src/mwfloat/_fmaext.c"],
            include_dirs=[numpy.get_include()],
            extra_compile_args=["-O2"],
        )
    ]
)
