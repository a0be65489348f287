"""Kernel backend selection.

Double-precision sums run through one of two interchangeable kernel sets:
numba-jitted loops (default when numba imports cleanly) or pure numpy.  Set
QEULER_BACKEND=numpy or QEULER_BACKEND=numba before the first evaluation to
force one; the choice is resolved once and cached.  This flag only swaps the
float kernels, it never changes results beyond floating-point noise, and the
exact and high-precision lanes ignore it entirely.
"""

import os

_active = None
_active_name = None


def _load(name: str):
    if name in ("auto", "numba"):
        try:
            from . import _kernels_numba as mod
            return mod, "numba"
        except ImportError:
            if name == "numba":
                raise RuntimeError(
                    "QEULER_BACKEND=numba was requested but numba is not importable")
            from . import _kernels_numpy as mod
            return mod, "numpy"
    if name == "numpy":
        from . import _kernels_numpy as mod
        return mod, "numpy"
    raise ValueError(f"unknown backend {name!r}; expected 'numpy' or 'numba'")


def get_backend(name=None):
    """Return the kernel module.  With no argument, resolve (once) from the
    QEULER_BACKEND environment variable, preferring numba."""
    global _active, _active_name
    if name is not None:
        return _load(name)[0]
    if _active is None:
        requested = os.environ.get("QEULER_BACKEND", "").strip().lower() or "auto"
        _active, _active_name = _load(requested)
    return _active


def backend_name() -> str:
    get_backend()
    return _active_name
