"""Exhaustive catalogs of small connected cacti, one graph per
isomorphism class.

Every connected cactus beyond a single vertex has a leaf block — a
pendant edge or a cycle hanging off one attachment vertex — so the whole
family is generated by repeatedly gluing pendant edges and cycles onto
smaller cacti.  Duplicates are filtered by Weisfeiler-Lehman hash
bucketing with exact isomorphism checks inside each bucket.
"""

from __future__ import annotations

import networkx as nx

from .graphs import Graph

__all__ = ["exhaustive_cacti", "to_networkx"]


def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


class _IsoCatalog:
    """Per-order catalog with hash-bucketed isomorphism rejection."""

    def __init__(self) -> None:
        self.graphs: list[Graph] = []
        self._buckets: dict[str, list[nx.Graph]] = {}

    def add(self, g: Graph) -> bool:
        nxg = to_networkx(g)
        key = nx.weisfeiler_lehman_graph_hash(nxg)
        bucket = self._buckets.setdefault(key, [])
        if any(nx.is_isomorphic(nxg, seen) for seen in bucket):
            return False
        bucket.append(nxg)
        self.graphs.append(g)
        return True


def _expansions(g: Graph, room: int) -> list[Graph]:
    """Cacti obtained by one pendant-edge or one cycle attachment, using
    at most ``room`` new vertices."""
    out = []
    n = g.n
    base = list(g.edges())
    for v in range(n):
        if room >= 1:
            out.append(Graph.from_edges(n + 1, base + [(v, n)]))
        for c in range(3, room + 2):  # cycle length c adds c - 1 vertices
            ring = list(range(n, n + c - 1))
            edges = base + [(v, ring[0]), (v, ring[-1])]
            edges += list(zip(ring, ring[1:]))
            out.append(Graph.from_edges(n + c - 1, edges))
    return out


def exhaustive_cacti(max_n: int) -> dict[int, list[Graph]]:
    """All connected cacti with 1..max_n vertices up to isomorphism,
    keyed by vertex count.  Deterministic order within each count."""
    if max_n < 1:
        raise ValueError("need max_n >= 1")
    catalogs = {n: _IsoCatalog() for n in range(1, max_n + 1)}
    catalogs[1].add(Graph(1, (frozenset(),)))
    for n in range(1, max_n):
        for g in catalogs[n].graphs:
            for bigger in _expansions(g, max_n - n):
                catalogs[bigger.n].add(bigger)
    return {n: catalogs[n].graphs for n in range(1, max_n + 1)}
