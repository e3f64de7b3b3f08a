"""Exact broadcast-time solvers.

``can_broadcast_within`` answers the bounded decision problem by exhaustive
search (compiled kernel, see ``_kernels.search``); ``exact_broadcast_time``
wraps it in iterated deepening from the doubling lower bound ceil(log2 n).
``tree_broadcast_time`` is the polynomial special case for trees.

Running out of search budget raises :class:`BudgetExhausted`; a plain "no"
answer is always exhaustive.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from ._kernels import broadcast_search, new_fail_memo
from ._kernels.search import MAX_KERNEL_VERTICES
from .graphs import Graph, is_connected
from .schedules import Call, CallSchedule, verify

__all__ = [
    "BudgetExhausted",
    "SearchBudget",
    "can_broadcast_within",
    "default_node_limit",
    "exact_broadcast_time",
    "tree_broadcast_time",
]

_ENV_NODE_LIMIT = "TELEBROADCAST_NODE_LIMIT"
_FALLBACK_NODE_LIMIT = 20_000_000


def default_node_limit() -> int:
    """Node budget used when none is given; overridable via the
    TELEBROADCAST_NODE_LIMIT environment variable."""
    raw = os.environ.get(_ENV_NODE_LIMIT)
    if raw is None:
        return _FALLBACK_NODE_LIMIT
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{_ENV_NODE_LIMIT} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{_ENV_NODE_LIMIT} must be positive, got {value}")
    return value


class BudgetExhausted(RuntimeError):
    """The search ran out of budget before reaching an answer."""


@dataclass(frozen=True)
class SearchBudget:
    max_rounds: int
    node_limit: int

    def __post_init__(self) -> None:
        if self.max_rounds < 1:
            raise ValueError(f"max_rounds must be positive, got {self.max_rounds}")
        if self.node_limit < 1:
            raise ValueError(f"node_limit must be positive, got {self.node_limit}")


def _adjacency_masks(g: Graph) -> np.ndarray:
    masks = np.zeros(g.n, np.int64)
    for v in range(g.n):
        acc = 0
        for w in g.adj[v]:
            acc |= 1 << w
        masks[v] = acc
    return masks


def _require_searchable(g: Graph, source: int) -> None:
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for {g.n} vertices")
    if g.n > MAX_KERNEL_VERTICES:
        raise ValueError(
            f"exact search handles at most {MAX_KERNEL_VERTICES} vertices, got {g.n}"
        )
    if not is_connected(g):
        raise ValueError("exact search expects a connected graph")


def _run_search(
    g: Graph,
    source: int,
    rounds: int,
    node_limit: int,
    memo,
) -> tuple[int, CallSchedule | None, int]:
    masks = _adjacency_masks(g)
    trail_rounds = np.zeros(g.n, np.int64)
    trail_callers = np.zeros(g.n, np.int64)
    trail_callees = np.zeros(g.n, np.int64)
    status, trail_len, nodes = broadcast_search(
        g.n,
        masks,
        source,
        rounds,
        node_limit,
        memo,
        trail_rounds,
        trail_callers,
        trail_callees,
    )
    if status != 1:
        return int(status), None, int(nodes)
    calls = tuple(
        Call(int(trail_rounds[i]), int(trail_callers[i]), int(trail_callees[i]))
        for i in range(trail_len)
    )
    schedule = CallSchedule(source=source, calls=calls)
    checked = verify(g, schedule)
    assert checked.accepted and checked.makespan is not None
    assert checked.makespan <= rounds
    return 1, schedule, int(nodes)


def can_broadcast_within(
    g: Graph, source: int, rounds: int, node_limit: int | None = None
) -> CallSchedule | None:
    """Schedule of makespan ≤ ``rounds`` from ``source``, or None when no
    such schedule exists (an exhaustive answer).

    Raises :class:`BudgetExhausted` when ``node_limit`` branch expansions
    are spent first, and ValueError on malformed inputs.
    """
    _require_searchable(g, source)
    if rounds < 0:
        raise ValueError(f"round bound must be nonnegative, got {rounds}")
    if rounds == 0:
        return CallSchedule(source=source) if g.n == 1 else None
    if node_limit is None:
        node_limit = default_node_limit()
    if node_limit < 1:
        raise ValueError(f"node_limit must be positive, got {node_limit}")
    status, schedule, _ = _run_search(g, source, rounds, node_limit, new_fail_memo())
    if status == -1:
        raise BudgetExhausted(
            f"no answer within {node_limit} search nodes (bound {rounds})"
        )
    return schedule


def exact_broadcast_time(
    g: Graph, source: int, budget: SearchBudget | None = None
) -> tuple[int, CallSchedule]:
    """Minimum number of rounds to inform everyone, plus a witness.

    Iterated deepening starting at the doubling bound ceil(log2 n); the
    failure memo and the node budget are shared across iterations.  The
    default bound of n-1 rounds always suffices on a connected graph, so
    exhaustion can only occur through the node limit unless a tighter
    budget is passed.
    """
    _require_searchable(g, source)
    if g.n == 1:
        return 0, CallSchedule(source=source)
    if budget is None:
        budget = SearchBudget(max_rounds=g.n - 1, node_limit=default_node_limit())
    lower = (g.n - 1).bit_length()  # == ceil(log2 n)
    memo = new_fail_memo()
    spent = 0
    for rounds in range(lower, budget.max_rounds + 1):
        remaining = budget.node_limit - spent
        if remaining < 1:
            raise BudgetExhausted(f"node budget {budget.node_limit} spent")
        status, schedule, nodes = _run_search(g, source, rounds, remaining, memo)
        if status == -1:
            raise BudgetExhausted(f"node budget {budget.node_limit} spent")
        if status == 1:
            assert schedule is not None
            return rounds, schedule
        spent += nodes
    raise BudgetExhausted(
        f"no schedule within the round cap {budget.max_rounds}; "
        "a larger max_rounds is needed for a definite answer"
    )


def tree_broadcast_time(g: Graph, source: int) -> tuple[int, CallSchedule]:
    """Optimal broadcast on a tree in O(n log n).

    Children are served in nonincreasing order of their own completion
    times (ties by vertex id), which is the classic exchange-optimal order:
    the i-th child (1-based) of v finishes by informed(v) + i + b(child).
    """
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for {g.n} vertices")
    if not is_connected(g) or g.edge_count != g.n - 1:
        raise ValueError("tree_broadcast_time expects a connected acyclic graph")

    parent = [-1] * g.n
    order = [source]
    seen = [False] * g.n
    seen[source] = True
    for v in order:
        for w in sorted(g.adj[v]):
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                order.append(w)

    children: list[list[int]] = [[] for _ in range(g.n)]
    finish = [0] * g.n
    for v in reversed(order):
        kids = sorted(children[v], key=lambda c: (-finish[c], c))
        children[v] = kids
        finish[v] = max(
            (i + 1 + finish[c] for i, c in enumerate(kids)), default=0
        )
        if parent[v] != -1:
            children[parent[v]].append(v)

    informed = [0] * g.n
    calls: list[Call] = []
    for v in order:
        for i, c in enumerate(children[v]):
            informed[c] = informed[v] + i + 1
            calls.append(Call(informed[c], v, c))
    schedule = CallSchedule(source=source, calls=tuple(sorted(calls)))
    checked = verify(g, schedule)
    assert checked.accepted and checked.makespan == finish[source]
    return finish[source], schedule
