"""Pick the compiled kernels when available.

Set CMPOLY_PURE_PYTHON=1 to force the pure-Python fallback.
"""
import os

from . import _kernels_py

# signed 64-bit headroom: b^2 + D and a^2 must not overflow
_C_LIMIT = 1 << 60

try:
    if os.environ.get("CMPOLY_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

HAVE_EXTENSION = _compiled is not None
BACKEND = "cython" if HAVE_EXTENSION else "python"


def _pick(D):
    if _compiled is not None and D < _C_LIMIT:
        return _compiled
    return _kernels_py


def reduced_forms(D):
    return _pick(D).reduced_forms(D)


def weber_forms(D):
    return _pick(D).weber_forms(D)


def hilbert_sum(D):
    return _pick(D).hilbert_sum(D)
