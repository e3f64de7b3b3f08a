"""Exhaustive selection scans for interval and dome instances.

Both scans enumerate selections as integers k ascending, so the first
feasible k is the lexicographically least selection (index-0 item in the
most significant bit, bit value 0 = first option).  The compiled variants
walk k incrementally; the numpy fallbacks evaluate selections in chunked
matrix form.  Either way the returned k is the same.

``tis_scan_*``: selection picks one interval of each twin pair (0 = left);
feasible when every time t is covered by at most ``caps[t]`` selected
intervals.

``dspr_scan_*``: selection picks one arc of each branching dome
(0 = outer).  Feasibility is checked in prefix form on a compressed time
grid: with g(t) = t minus the count of forced endpoints at or before t, a
selection works iff at every grid point the number of chosen endpoints so
far is at most the minimum of g over the stretch that grid point opens.
The caller builds the grid, the per-arc endpoint positions, and the
stretch minima ``gmin``.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via TELEBROADCAST_NO_NUMBA
    _HAVE_NUMBA = False

_CHUNK = 8192


def tis_scan_loop(pair_count, m, left_start, left_end, right_start, right_end, caps):
    """First feasible selection index, or -1.  Incremental: flips between
    consecutive k touch amortized O(1) pairs; a running count of
    over-covered times stands in for a full feasibility check."""
    cover = np.zeros(m + 1, np.int64)
    for i in range(pair_count):
        for t in range(left_start[i], left_end[i] + 1):
            cover[t] += 1
    bad = 0
    for t in range(1, m + 1):
        if cover[t] > caps[t]:
            bad += 1
    if bad == 0:
        return 0
    total = 1 << pair_count
    for k in range(total - 1):
        x = k ^ (k + 1)
        j = 0
        while x != 0:
            if x & 1:
                pair = pair_count - 1 - j
                if ((k + 1) >> j) & 1 == 1:
                    s = left_start[pair]
                    e = left_end[pair]
                    for t in range(s, e + 1):
                        cover[t] -= 1
                        if cover[t] == caps[t]:
                            bad -= 1
                    s = right_start[pair]
                    e = right_end[pair]
                    for t in range(s, e + 1):
                        cover[t] += 1
                        if cover[t] == caps[t] + 1:
                            bad += 1
                else:
                    s = right_start[pair]
                    e = right_end[pair]
                    for t in range(s, e + 1):
                        cover[t] -= 1
                        if cover[t] == caps[t]:
                            bad -= 1
                    s = left_start[pair]
                    e = left_end[pair]
                    for t in range(s, e + 1):
                        cover[t] += 1
                        if cover[t] == caps[t] + 1:
                            bad += 1
            x >>= 1
            j += 1
        if bad == 0:
            return k + 1
    return -1


def tis_scan_numpy(pair_count, m, left_start, left_end, right_start, right_end, caps):
    base = np.zeros(m + 1, np.int64)
    for i in range(pair_count):
        base[left_start[i] : left_end[i] + 1] += 1
    if pair_count == 0:
        return 0 if bool(np.all(base[1:] <= caps[1:])) else -1
    diffs = np.zeros((pair_count, m + 1), np.int16)
    for i in range(pair_count):
        diffs[i, right_start[i] : right_end[i] + 1] += 1
        diffs[i, left_start[i] : left_end[i] + 1] -= 1
    shifts = np.arange(pair_count - 1, -1, -1, dtype=np.int64)
    total = 1 << pair_count
    for start in range(0, total, _CHUNK):
        ks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        bits = ((ks[:, None] >> shifts[None, :]) & 1).astype(np.int16)
        cover = base[None, 1:] + bits @ diffs[:, 1:]
        ok = np.all(cover <= caps[None, 1:], axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            return int(ks[hits[0]])
    return -1


def dspr_scan_loop(dome_count, grid_size, out_a, out_b, in_a, in_b, gmin):
    counts = np.zeros(grid_size, np.int64)
    total = 1 << dome_count
    for k in range(total):
        for i in range(grid_size):
            counts[i] = 0
        for d in range(dome_count):
            if (k >> (dome_count - 1 - d)) & 1 == 0:
                counts[out_a[d]] += 1
                counts[out_b[d]] += 1
            else:
                counts[in_a[d]] += 1
                counts[in_b[d]] += 1
        run = 0
        ok = True
        for i in range(grid_size):
            run += counts[i]
            if run > gmin[i]:
                ok = False
                break
        if ok:
            return k
    return -1


def dspr_scan_numpy(dome_count, grid_size, out_a, out_b, in_a, in_b, gmin):
    if dome_count == 0:
        return 0
    base = np.zeros(grid_size, np.int16)
    np.add.at(base, out_a, 1)
    np.add.at(base, out_b, 1)
    diffs = np.zeros((dome_count, grid_size), np.int16)
    for d in range(dome_count):
        diffs[d, in_a[d]] += 1
        diffs[d, in_b[d]] += 1
        diffs[d, out_a[d]] -= 1
        diffs[d, out_b[d]] -= 1
    shifts = np.arange(dome_count - 1, -1, -1, dtype=np.int64)
    total = 1 << dome_count
    for start in range(0, total, _CHUNK):
        ks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        bits = ((ks[:, None] >> shifts[None, :]) & 1).astype(np.int16)
        prefix = np.cumsum(base[None, :] + bits @ diffs, axis=1)
        ok = np.all(prefix <= gmin[None, :], axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            return int(ks[hits[0]])
    return -1


if _HAVE_NUMBA:
    tis_scan_jit = njit(cache=True)(tis_scan_loop)
    dspr_scan_jit = njit(cache=True)(dspr_scan_loop)
else:  # pragma: no cover - exercised via TELEBROADCAST_NO_NUMBA
    tis_scan_jit = tis_scan_loop
    dspr_scan_jit = dspr_scan_loop
