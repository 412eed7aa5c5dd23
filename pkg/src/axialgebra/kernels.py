"""Backend selection for the hot kernels.

The compiled extension is used when it was built and ``AXIALGEBRA_PURE`` is
unset; otherwise the pure-Python versions are used.
"""
import os

from . import _pykernels

try:
    if os.environ.get("AXIALGEBRA_PURE"):
        raise ImportError("pure backend requested")
    from . import _kernels as _impl
    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

# the compiled kernel multiplies residues in 64-bit integers
MAX_COMPILED_PRIME = 2**31


def rref_modp(rows, p):
    if p < MAX_COMPILED_PRIME:
        return _impl.rref_modp(rows, p)
    return _pykernels.rref_modp(rows, p)
