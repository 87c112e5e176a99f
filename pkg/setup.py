import os

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; kernels fall back at import
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("wps_lab._kernels", [os.path.join("src", "wps_lab", "_kernels.pyx")],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
