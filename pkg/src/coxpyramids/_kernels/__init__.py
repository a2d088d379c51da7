"""Floating-point kernels behind the volume computations.

The compiled ``_speedups`` extension is used when it was built; otherwise the
pure-Python ``_purepy`` module with identical algorithms is used. Setting
``COXPYRAMIDS_PUREPY=1`` forces the fallback.
"""

import os

from . import _purepy

if os.environ.get("COXPYRAMIDS_PUREPY", "") not in ("", "0"):
    _impl = _purepy
else:
    try:
        from . import _speedups as _impl
    except ImportError:  # extension not built
        _impl = _purepy

BACKEND = "compiled" if _impl is not _purepy else "python"

lobachevsky = _impl.lobachevsky
quad_rect = _impl.quad_rect

__all__ = ["BACKEND", "lobachevsky", "quad_rect"]
