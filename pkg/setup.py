from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; continuum._core falls back
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("continuum._kernels", ["src/continuum/_kernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
