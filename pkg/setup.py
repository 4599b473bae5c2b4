from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "entropoid._ckernel",
        sources=["src/entropoid/_ckernel.pyx", "src/entropoid/csrc/star_kernel.c"],
        include_dirs=["src/entropoid"],
        extra_compile_args=["-O3"],
        optional=True,
    )
]

setup(ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}))
