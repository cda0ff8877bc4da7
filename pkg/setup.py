from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; superdirac.kernels falls back
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "superdirac._kernels",
                ["src/superdirac/_kernels.pyx"],
                language="c++",
                extra_compile_args=["-O3", "-std=c++17"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)
