"""Reference implementations the tests compare against.

Everything here is deliberately unpruned and slow; the point is to have an
oracle whose correctness is obvious.
"""

from __future__ import annotations

from telebroadcast.graphs import Graph


def brute_broadcast_time(g: Graph, source: int) -> int:
    """Minimum broadcast rounds by breadth-first search over informed sets.

    Every per-round call pattern is tried, including partial ones where
    informed vertices idle, so this makes none of the normalization
    assumptions the production search relies on.  Exponential in every
    direction; keep n at 7 or below.
    """
    full = (1 << g.n) - 1
    start = 1 << source
    if start == full:
        return 0
    frontier = {start}
    seen = {start}
    rounds = 0
    while True:
        rounds += 1
        next_frontier: set[int] = set()
        for informed in frontier:
            callers = [v for v in range(g.n) if informed >> v & 1]

            def extend(i: int, taken: int) -> None:
                if i == len(callers):
                    state = informed | taken
                    if state not in seen:
                        seen.add(state)
                        next_frontier.add(state)
                    return
                extend(i + 1, taken)  # this caller idles
                for u in g.adj[callers[i]]:
                    bit = 1 << u
                    if not (informed | taken) & bit:
                        extend(i + 1, taken | bit)

            extend(0, 0)
        if full in seen:
            return rounds
        assert next_frontier, "brute oracle needs a connected graph"
        frontier = next_frontier
