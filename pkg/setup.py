from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        [Extension("qmink._nf_cy", ["src/qmink/_nf_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # the pure-Python kernel is selected at import when the compiled
    # twin is unavailable
    ext_modules = []

setup(ext_modules=ext_modules)
