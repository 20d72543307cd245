import sys

from setuptools import setup

# The compiled kernel is an optimization; the package works (more slowly)
# without it, so a failed cythonize must not block installation.
ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("extph._kernel", ["src/extph/_kernel.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover
    sys.stderr.write(f"extph: building without compiled kernel ({exc})\n")

setup(ext_modules=ext_modules)
