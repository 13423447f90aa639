"""JIT switch for the hot kernels.

Setting ``DEGTURAN_PURE=1`` (or running without numba installed) leaves every
kernel as plain Python operating on numpy arrays. Results are identical;
only speed differs.
"""

import os

PURE = os.environ.get("DEGTURAN_PURE", "").strip().lower() in ("1", "true", "yes", "on")

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    PURE = True

JIT_ENABLED = not PURE


def njit(*args, **kwargs):
    """``numba.njit`` when enabled, identity otherwise."""
    if args and callable(args[0]) and len(args) == 1 and not kwargs:
        func = args[0]
        if not JIT_ENABLED:
            return func
        return numba.njit(cache=True)(func)

    def decorator(func):
        if not JIT_ENABLED:
            return func
        kwargs.setdefault("cache", True)
        return numba.njit(*args, **kwargs)(func)

    return decorator
