"""Kernel selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python versions in ``_pykernels`` are used.  Setting the environment
variable ``DEGBERN_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("DEGBERN_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _pykernels
    else:
        BACKEND = "cython"
else:
    _impl = _pykernels

convolve_int = _impl.convolve_int
cauchy = _impl.cauchy

__all__ = ["BACKEND", "convolve_int", "cauchy"]
