import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("IELIE_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("ielie._ckernel", ["src/ielie/_ckernel.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
