"""Hot numeric kernels with a compiled and a pure backend.

The search and scan loops below run either under numba's ``@njit`` or as
plain Python/numpy code.  The compiled path is the default whenever numba
imports; setting the environment variable ``TELEBROADCAST_NO_NUMBA`` (to any
non-empty value) forces the pure path.  ``benchmarks/kernel_bench.py`` times
the two side by side by importing both variants directly.
"""

from __future__ import annotations

import os

_FORCED_PURE = bool(os.environ.get("TELEBROADCAST_NO_NUMBA"))

try:
    if _FORCED_PURE:
        raise ImportError("numba disabled by TELEBROADCAST_NO_NUMBA")
    from numba import njit as _njit  # noqa: F401

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

ACTIVE_BACKEND = "numba" if HAS_NUMBA else "pure"

from . import scans, search  # noqa: E402

if HAS_NUMBA:
    broadcast_search = search.broadcast_search_jit
    tis_scan = scans.tis_scan_jit
    dspr_scan = scans.dspr_scan_jit
else:
    broadcast_search = search.broadcast_search_py
    tis_scan = scans.tis_scan_numpy
    dspr_scan = scans.dspr_scan_numpy


def new_fail_memo():
    """Memo dict for :func:`broadcast_search`, typed to match the backend."""
    if HAS_NUMBA:
        from numba import types
        from numba.typed import Dict

        return Dict.empty(key_type=types.int64, value_type=types.int64)
    return {}


__all__ = [
    "ACTIVE_BACKEND",
    "HAS_NUMBA",
    "broadcast_search",
    "dspr_scan",
    "new_fail_memo",
    "tis_scan",
]
