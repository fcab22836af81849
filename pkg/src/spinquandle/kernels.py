"""Kernel backend selection.

The compiled extension is used when it was built; otherwise, or when
``SPINQUANDLE_PURE_PYTHON`` is set to a non-empty value, the pure-Python
twin is loaded.  ``BACKEND`` records which one is active.
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("SPINQUANDLE_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

blade_sign = _impl.blade_sign
gp_float = _impl.gp_float
quandle_witness = _impl.quandle_witness
find_isomorphism = _impl.find_isomorphism


def backends() -> dict:
    """All importable backends by name, for benchmarks and cross-checks."""
    out = {"python": _kernels_py}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
