"""JIT switch for the numeric kernels.

Kernels are written in the numba-compatible subset of Python. When numba is
importable and ``ROOKDOM_DISABLE_JIT`` is unset (or ``0``), they are compiled
with ``numba.njit``; otherwise the plain Python/numpy function is used.
Either way the uncompiled function stays reachable as ``kernel.py_func``.
"""

from __future__ import annotations

import os

_FLAG = os.environ.get("ROOKDOM_DISABLE_JIT", "").strip().lower()
JIT_DISABLED = _FLAG not in ("", "0", "false", "no")

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

JIT_ENABLED = numba is not None and not JIT_DISABLED


def jit(fn):
    if not JIT_ENABLED:
        fn.py_func = fn
        return fn
    return numba.njit(cache=True)(fn)
