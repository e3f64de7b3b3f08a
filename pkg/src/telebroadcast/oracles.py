"""Exhaustive feasibility oracles for interval and dome instances.

Each oracle enumerates selections ascending (first item in the most
significant bit, bit 0 = first option / outer arc), so the returned
selection is lexicographically least among feasible ones.  The scans run
on the active kernel backend; every witness is re-confirmed here with the
plain literal check before it is returned.

The dome instance feasibility has two equivalent readings.  The prefix
reading bounds how many selected endpoints may sit at or before each time;
the shift reading asks for distinct target slots, each at or before its
endpoint.  A greedy slot assignment (smallest free slot per endpoint, in
time order) succeeds exactly when the prefix condition holds, so the
selection search is shared and only the witness extraction differs.
"""

from __future__ import annotations

import heapq

import numpy as np

from . import _kernels
from .instances import (
    Dome,
    DomeInstance,
    DomeSelection,
    TwinIntervalInstance,
    chosen_arcs,
)

__all__ = [
    "SCAN_CAP",
    "cds_check_selection",
    "cds_oracle",
    "dspr_check_selection",
    "dspr_oracle",
    "tis_check_selection",
    "tis_oracle",
]

# An exhaustive 2^n scan stops being an oracle past this size.
SCAN_CAP = 25


def tis_check_selection(
    inst: TwinIntervalInstance, pick_first: tuple[bool, ...]
) -> bool:
    """Literal check: selected intervals cover no time beyond its cap."""
    if len(pick_first) != inst.pair_count:
        raise ValueError(
            f"selection has {len(pick_first)} entries for {inst.pair_count} pairs"
        )
    cover = [0] * (inst.m + 1)
    for (first, second), take_first in zip(inst.pairs, pick_first):
        s, e = first if take_first else second
        for t in range(s, e + 1):
            cover[t] += 1
    return all(cover[t] <= inst.restriction[t - 1] for t in range(1, inst.m + 1))


def tis_oracle(inst: TwinIntervalInstance) -> tuple[bool, ...] | None:
    """Lexicographically least feasible selection (True = first interval),
    or None when all selections break some cap."""
    count = inst.pair_count
    if count > SCAN_CAP:
        raise ValueError(f"refusing exhaustive scan over {count} pairs (cap {SCAN_CAP})")
    left_start = np.zeros(count, np.int64)
    left_end = np.zeros(count, np.int64)
    right_start = np.zeros(count, np.int64)
    right_end = np.zeros(count, np.int64)
    for i, (first, second) in enumerate(inst.pairs):
        left_start[i], left_end[i] = first
        right_start[i], right_end[i] = second
    caps = np.zeros(inst.m + 1, np.int64)
    caps[1:] = inst.restriction
    k = _kernels.tis_scan(count, inst.m, left_start, left_end, right_start, right_end, caps)
    if k < 0:
        return None
    selection = tuple(((k >> (count - 1 - i)) & 1) == 0 for i in range(count))
    assert tis_check_selection(inst, selection)
    return selection


def dspr_check_selection(inst: DomeInstance, sel: DomeSelection) -> bool:
    """Literal prefix check: at every time t in 1..m, at most t selected
    endpoints sit at or before t."""
    arcs = chosen_arcs(inst, sel)
    times = sorted(t for arc in arcs for t in arc)
    seen = 0
    for t in range(1, inst.m + 1):
        while seen < len(times) and times[seen] <= t:
            seen += 1
        if seen > t:
            return False
    return True


def _forced_slack(inst: DomeInstance) -> list[int]:
    """g(t) = t - (singleton endpoints at or before t), for t in 1..m,
    stored at index t (index 0 unused)."""
    forced = sorted(
        t for dome in inst.domes if dome.singleton for t in (dome.outer_start, dome.outer_end)
    )
    g = [0] * (inst.m + 1)
    seen = 0
    for t in range(1, inst.m + 1):
        while seen < len(forced) and forced[seen] <= t:
            seen += 1
        g[t] = t - seen
    return g


def dspr_oracle(inst: DomeInstance) -> DomeSelection | None:
    """Lexicographically least prefix-feasible selection (outer preferred),
    or None.  Singleton domes are forced outer and folded into the slack
    function; the scan only branches on the others."""
    regulars = [i for i, dome in enumerate(inst.domes) if not dome.singleton]
    if len(regulars) > SCAN_CAP:
        raise ValueError(
            f"refusing exhaustive scan over {len(regulars)} branching domes (cap {SCAN_CAP})"
        )
    g = _forced_slack(inst)
    if min(g[1:], default=0) < 0:
        return None
    outer = [True] * len(inst.domes)
    if not regulars:
        sel = DomeSelection(tuple(outer))
        assert dspr_check_selection(inst, sel)
        return sel

    grid = sorted({t for i in regulars for t in inst.domes[i].endpoints})
    bucket = {t: j for j, t in enumerate(grid)}
    gmin = np.zeros(len(grid), np.int64)
    for j, t in enumerate(grid):
        stretch_end = grid[j + 1] - 1 if j + 1 < len(grid) else inst.m
        gmin[j] = min(g[t : stretch_end + 1])
    out_a = np.zeros(len(regulars), np.int64)
    out_b = np.zeros(len(regulars), np.int64)
    in_a = np.zeros(len(regulars), np.int64)
    in_b = np.zeros(len(regulars), np.int64)
    for r, i in enumerate(regulars):
        dome = inst.domes[i]
        out_a[r] = bucket[dome.outer_start]
        out_b[r] = bucket[dome.outer_end]
        in_a[r] = bucket[dome.inner_start]
        in_b[r] = bucket[dome.inner_end]
    k = _kernels.dspr_scan(len(regulars), len(grid), out_a, out_b, in_a, in_b, gmin)
    if k < 0:
        return None
    for r, i in enumerate(regulars):
        outer[i] = ((k >> (len(regulars) - 1 - r)) & 1) == 0
    sel = DomeSelection(tuple(outer))
    assert dspr_check_selection(inst, sel)
    return sel


def cds_check_selection(
    inst: DomeInstance, sel: DomeSelection
) -> tuple[tuple[int, int], ...] | None:
    """Greedy shift assignment for a fixed selection: walk t = 1..m keeping
    a pool of free slots, and give each selected endpoint at t the smallest
    free slot.  Returns per-dome (start_shift, end_shift) target times, or
    None when some endpoint finds the pool empty.  The produced shifts are
    distinct and never later than the endpoint they move."""
    arcs = chosen_arcs(inst, sel)
    events = sorted(
        (time, dome_idx, side)
        for dome_idx, arc in enumerate(arcs)
        for side, time in enumerate(arc)
    )
    shifts: list[list[int]] = [[0, 0] for _ in arcs]
    pool: list[int] = []
    next_event = 0
    for t in range(1, inst.m + 1):
        heapq.heappush(pool, t)
        while next_event < len(events) and events[next_event][0] == t:
            _, dome_idx, side = events[next_event]
            next_event += 1
            if not pool:
                return None
            shifts[dome_idx][side] = heapq.heappop(pool)
    assert next_event == len(events)
    return tuple((start, end) for start, end in shifts)


def cds_oracle(
    inst: DomeInstance,
) -> tuple[DomeSelection, tuple[tuple[int, int], ...]] | None:
    """Feasible selection plus distinct shift targets, or None.  Selection
    search is the prefix scan (the two feasibility readings agree); the
    shifts come from the greedy assignment and are re-checked by it."""
    sel = dspr_oracle(inst)
    if sel is None:
        return None
    shifts = cds_check_selection(inst, sel)
    assert shifts is not None
    return sel, shifts
