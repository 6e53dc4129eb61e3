"""Build the compiled coin-flip core; installs fall back to pure Python.

The extension is optional: when Cython or a C compiler is unavailable the
package still installs and ``petersburg.backend`` selects the numpy
fallback at import time.  Set PETERSBURG_NO_EXTENSION=1 to skip the build
explicitly.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PETERSBURG_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        flags = ["/O2"] if os.name == "nt" else ["-O3"]
        ext_modules = cythonize(
            [
                Extension(
                    "petersburg._mtcore",
                    ["src/petersburg/_mtcore.pyx"],
                    extra_compile_args=flags,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
