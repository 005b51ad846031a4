"""Numba switch. Set ``ZETA_FORGE_DISABLE_NUMBA=1`` to force the numpy path."""

from __future__ import annotations

import os
from typing import Any, Callable

_DISABLED = os.environ.get("ZETA_FORGE_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    from numba import njit as _numba_njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is an optional speedup
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _DISABLED


def njit(*args: Any, **kwargs: Any) -> Callable:
    """``numba.njit`` when available, identity decorator otherwise.

    The decorated function is always compiled lazily, so importing the package
    never pays the JIT cost when the numpy path is selected.
    """
    if HAVE_NUMBA:
        return _numba_njit(*args, **kwargs)
    if args and callable(args[0]):
        return args[0]
    return lambda f: f


def max_workers() -> int:
    """Worker cap from ``ZETA_FORGE_THREADS`` (default 1)."""
    raw = os.environ.get("ZETA_FORGE_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"ZETA_FORGE_THREADS must be an integer >= 1, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"ZETA_FORGE_THREADS must be an integer >= 1, got {raw!r}")
    return n
