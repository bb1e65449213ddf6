"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; set the
environment variable ``FLAGREP_PURE=1`` before import to force the
pure-Python backend (the benchmark and the backend-equivalence tests use
both modules directly).
"""

import os

from . import _kernels_py

try:
    from . import _speedups
except ImportError:  # extension not built on this install
    _speedups = None

if _speedups is not None and os.environ.get("FLAGREP_PURE") != "1":
    _impl = _speedups
else:
    _impl = _kernels_py

dominant_representative = _impl.dominant_representative
weyl_orbit = _impl.weyl_orbit
freudenthal = _impl.freudenthal
orbit_terms = _impl.orbit_terms
poly_mul = _impl.poly_mul


def kernel_backend() -> str:
    """Name of the kernel backend selected at import time."""
    return "pure" if _impl is _kernels_py else "compiled"
