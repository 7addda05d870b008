from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# the package imports a pure-Python fallback when the extension is missing
ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [Extension("fdbseries._kernels", ["src/fdbseries/_kernels.pyx"],
                   extra_compile_args=["-O3"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
