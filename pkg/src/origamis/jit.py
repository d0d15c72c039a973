"""Numba glue: decide once, at import, whether kernels get JIT-compiled.

The environment variable ``ORIGAMI_NUMBA`` selects the backend:

- unset or ``1`` -- use numba if it imports, else fall back silently;
- ``0`` -- force the pure-Python fallback (useful for debugging and for
  the backend-comparison benchmark).

Kernels are written once, in nopython-compatible style, and wrapped by
:func:`kernel`; the fallback simply runs the same code uncompiled.
"""

import os

NUMBA_ENABLED = os.environ.get("ORIGAMI_NUMBA", "1") != "0"

if NUMBA_ENABLED:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover - numba is a hard dependency
        NUMBA_ENABLED = False

if NUMBA_ENABLED:
    def kernel(func):
        return _njit(cache=True)(func)
else:
    def kernel(func):
        return func
