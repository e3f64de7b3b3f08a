"""Bounded exhaustive search for telephone broadcast schedules.

One function body serves both backends: ``broadcast_search_py`` is the plain
function and ``broadcast_search_jit`` is the same object compiled with
``@njit``, so the two enumerate states in exactly the same order and return
identical witnesses by construction.

The search walks rounds 1..max_rounds, scanning callers in ascending id
order inside each round.  An informed caller with at least one uninformed,
unclaimed neighbor must call one of them (callers never idle while useful
work exists; any schedule can be rewritten into this form round by round
without increasing its makespan, which the test suite cross-checks against
an unpruned enumerator).  Pruning: a doubling bound on the informed count,
and a memo of informed-sets known to fail with a given number of rounds
remaining.  The memo outlives a call, so iterated deepening reuses it.

Vertex sets are int64 bitmasks, which caps instances at 62 vertices: the
next power of two would overflow the compiled path's int64 while plain
Python kept going, and the backends must agree bit for bit.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via TELEBROADCAST_NO_NUMBA
    _HAVE_NUMBA = False

MAX_KERNEL_VERTICES = 62

_FOUND = 1
_EXHAUSTED = 0
_OUT_OF_BUDGET = -1

_ADVANCE = 0
_UNWIND = 1
_RESUME = 2


def broadcast_search_py(
    n,
    adj_masks,
    source,
    max_rounds,
    node_limit,
    fail_memo,
    trail_rounds,
    trail_callers,
    trail_callees,
):
    """Search for a schedule informing all ``n`` vertices within
    ``max_rounds`` rounds.

    Returns ``(status, trail_len, nodes)`` with status 1 (found: the first
    ``trail_len`` entries of the trail arrays hold the schedule), 0 (no
    schedule exists within the bound), or -1 (``node_limit`` branch
    expansions spent).  ``fail_memo`` maps informed-set masks to the largest
    remaining-round count known to fail from them; entries stay valid across
    calls with different bounds.
    """
    full = (1 << n) - 1

    cap = (n + 1) * max_rounds + 2
    fr_informed = np.zeros(cap, np.int64)
    fr_claimed = np.zeros(cap, np.int64)
    fr_caller = np.zeros(cap, np.int64)
    fr_pending = np.zeros(cap, np.int64)
    fr_rounds = np.zeros(cap, np.int64)
    fr_mark = np.zeros(cap, np.int64)
    fr_boundary = np.zeros(cap, np.int64)
    sp = 0

    informed = 1 << source
    claimed = 0
    caller = 0
    rounds = max_rounds
    trail_len = 0
    nodes = 0
    mode = _ADVANCE

    while True:
        if mode == _ADVANCE:
            branched = False
            while caller < n:
                if (informed >> caller) & 1:
                    avail = adj_masks[caller] & ~informed & ~claimed
                    if avail != 0:
                        fr_informed[sp] = informed
                        fr_claimed[sp] = claimed
                        fr_caller[sp] = caller
                        fr_pending[sp] = avail
                        fr_rounds[sp] = rounds
                        fr_mark[sp] = trail_len
                        fr_boundary[sp] = 0
                        sp += 1
                        branched = True
                        break
                caller += 1
            if branched:
                mode = _RESUME
                continue
            merged = informed | claimed
            if merged == full:
                return _FOUND, trail_len, nodes
            rounds_after = rounds - 1
            failed = rounds_after <= 0
            if not failed and rounds_after < 7:
                pc = 0
                x = merged
                while x != 0:
                    x &= x - 1
                    pc += 1
                if (pc << rounds_after) < n:
                    failed = True
            if not failed and merged in fail_memo:
                if fail_memo[merged] >= rounds_after:
                    failed = True
            if failed:
                mode = _UNWIND
                continue
            fr_informed[sp] = merged
            fr_claimed[sp] = 0
            fr_caller[sp] = 0
            fr_pending[sp] = 0
            fr_rounds[sp] = rounds_after
            fr_mark[sp] = trail_len
            fr_boundary[sp] = 1
            sp += 1
            informed = merged
            claimed = 0
            caller = 0
            rounds = rounds_after
            continue

        if mode == _UNWIND:
            resumable = False
            while sp > 0:
                top = sp - 1
                if fr_boundary[top] == 1:
                    key = fr_informed[top]
                    val = fr_rounds[top]
                    if key in fail_memo:
                        if fail_memo[key] < val:
                            fail_memo[key] = val
                    else:
                        fail_memo[key] = val
                    sp -= 1
                    continue
                if fr_pending[top] == 0:
                    sp -= 1
                    continue
                resumable = True
                break
            if not resumable:
                return _EXHAUSTED, 0, nodes
            mode = _RESUME
            continue

        # mode == _RESUME: expand the next pending callee of the top frame.
        if nodes >= node_limit:
            return _OUT_OF_BUDGET, 0, nodes
        nodes += 1
        top = sp - 1
        pending = fr_pending[top]
        bit = pending & (-pending)
        fr_pending[top] = pending ^ bit
        callee = 0
        while ((bit >> callee) & 1) == 0:
            callee += 1
        trail_len = fr_mark[top]
        trail_rounds[trail_len] = max_rounds - fr_rounds[top] + 1
        trail_callers[trail_len] = fr_caller[top]
        trail_callees[trail_len] = callee
        trail_len += 1
        informed = fr_informed[top]
        claimed = fr_claimed[top] | bit
        caller = fr_caller[top] + 1
        rounds = fr_rounds[top]
        mode = _ADVANCE


if _HAVE_NUMBA:
    broadcast_search_jit = njit(cache=True)(broadcast_search_py)
else:  # pragma: no cover - exercised via TELEBROADCAST_NO_NUMBA
    broadcast_search_jit = broadcast_search_py
