"""Cycle structure of cacti.

A connected graph is a cactus when every edge lies on at most one simple
cycle; equivalently, every biconnected block is a single edge or a chordless
cycle.  :func:`decompose_cactus` returns the block structure as an explicit
value, or a rejection carrying an edge that lies on two distinct cycles
together with those two cycles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, is_connected

__all__ = [
    "CactusRejection",
    "CycleStructure",
    "decompose_cactus",
]


@dataclass(frozen=True)
class CycleStructure:
    """Cycles (as cyclic vertex sequences) and cut edges of a cactus."""

    cycles: tuple[tuple[int, ...], ...]
    cut_edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class CactusRejection:
    """Witness that a graph is not a cactus."""

    reason: str
    witness_edge: tuple[int, int]
    cycles: tuple[tuple[int, ...], tuple[int, ...]]


def _biconnected_blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge lists of the biconnected blocks (iterative depth-first search)."""
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    timer = 0
    blocks: list[list[tuple[int, int]]] = []
    edge_stack: list[tuple[int, int]] = []
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, object]] = [(root, iter(sorted(g.adj[root])))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:  # type: ignore[union-attr]
                if w == parent[v]:
                    continue
                if disc[w] == -1:
                    parent[w] = v
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while edge_stack[-1] != (u, v):
                        block.append(edge_stack.pop())
                    block.append(edge_stack.pop())
                    blocks.append(block)
    return blocks


def _canonical_cycle(vertices: set[int], adj: dict[int, set[int]]) -> tuple[int, ...]:
    """Cyclic vertex order starting at the smallest vertex, toward its
    smaller neighbor."""
    start = min(vertices)
    nxt = min(adj[start])
    order = [start, nxt]
    while True:
        prev, cur = order[-2], order[-1]
        step = next(x for x in adj[cur] if x != prev)
        if step == start:
            break
        order.append(step)
    return tuple(order)


def _shortest_path(
    adj: dict[int, set[int]],
    s: int,
    t: int,
    banned: set[tuple[int, int]],
) -> list[int] | None:
    from collections import deque

    prev: dict[int, int] = {s: s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            break
        for w in sorted(adj[u]):
            if (u, w) in banned or (w, u) in banned:
                continue
            if w not in prev:
                prev[w] = u
                queue.append(w)
    if t not in prev:
        return None
    path = [t]
    while path[-1] != s:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def _two_cycles_through_some_edge(
    block_edges: list[tuple[int, int]],
) -> tuple[tuple[int, int], tuple[int, ...], tuple[int, ...]]:
    """In a biconnected block that is not a cycle, find an edge lying on two
    distinct simple cycles and return the edge plus both cycles."""
    adj: dict[int, set[int]] = {}
    for u, v in block_edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    for u, v in sorted((min(e), max(e)) for e in block_edges):
        first = _shortest_path(adj, u, v, {(u, v)})
        if first is None:
            continue
        for i in range(len(first) - 1):
            f = (first[i], first[i + 1])
            second = _shortest_path(adj, u, v, {(u, v), f})
            if second is not None and second != first:
                cycle_a = tuple(first)
                cycle_b = tuple(second)
                return (u, v), cycle_a, cycle_b
    raise AssertionError("biconnected non-cycle block must contain such an edge")


def decompose_cactus(g: Graph) -> CycleStructure | CactusRejection:
    """Split a connected graph into its cycles and cut edges.

    Returns :class:`CycleStructure` when every block is an edge or a
    chordless cycle, otherwise a :class:`CactusRejection` whose witness edge
    lies on the two returned cycles.
    """
    if not is_connected(g):
        raise ValueError("decompose_cactus expects a connected graph")
    cycles: list[tuple[int, ...]] = []
    cut_edges: set[tuple[int, int]] = set()
    for block in _biconnected_blocks(g):
        if len(block) == 1:
            u, v = block[0]
            cut_edges.add((min(u, v), max(u, v)))
            continue
        verts: set[int] = set()
        adj: dict[int, set[int]] = {}
        for u, v in block:
            verts.add(u)
            verts.add(v)
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        if len(block) == len(verts) and all(len(s) == 2 for s in adj.values()):
            cycles.append(_canonical_cycle(verts, adj))
            continue
        edge, cyc_a, cyc_b = _two_cycles_through_some_edge(block)
        return CactusRejection(
            reason=(
                f"edge {edge} lies on two distinct simple cycles; a cactus "
                "allows at most one"
            ),
            witness_edge=edge,
            cycles=(cyc_a, cyc_b),
        )
    cycles.sort(key=lambda c: (c[0], len(c), c))
    return CycleStructure(tuple(cycles), frozenset(cut_edges))
