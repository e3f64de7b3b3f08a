from __future__ import annotations

import itertools

import networkx as nx
import pytest

from telebroadcast.cactus import CycleStructure, decompose_cactus
from telebroadcast.corpus import exhaustive_cacti, to_networkx
from telebroadcast.graphs import Graph

# number of connected cacti on n unlabeled vertices, n = 1..9
KNOWN_COUNTS = [1, 1, 2, 4, 9, 23, 63, 188, 596]


@pytest.fixture(scope="module")
def corpus():
    return exhaustive_cacti(9)


def test_census_counts(corpus):
    assert [len(corpus[n]) for n in range(1, 10)] == KNOWN_COUNTS


def test_members_are_distinct_connected_cacti(corpus):
    for n, graphs in corpus.items():
        for g in graphs:
            assert g.n == n
            assert isinstance(decompose_cactus(g), CycleStructure)
        # pairwise non-isomorphic (cheap sizes only; the independent
        # enumeration below re-derives the counts anyway)
        if n <= 6:
            for a, b in itertools.combinations(graphs, 2):
                assert not nx.is_isomorphic(to_networkx(a), to_networkx(b))


def _is_cactus_nx(g: nx.Graph) -> bool:
    for component in nx.biconnected_component_edges(g):
        edges = list(component)
        vertices = {v for e in edges for v in e}
        if len(edges) > 1 and len(edges) != len(vertices):
            return False
    return True


def _independent_census(n: int) -> int:
    """Count connected cacti on n vertices by brute force over all edge
    subsets, deduplicated by isomorphism.  Entirely separate machinery from
    the leaf-block construction under test."""
    all_edges = list(itertools.combinations(range(n), 2))
    found: list[nx.Graph] = []
    for bits in range(1 << len(all_edges)):
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(e for i, e in enumerate(all_edges) if bits >> i & 1)
        if not nx.is_connected(g):
            continue
        if not _is_cactus_nx(g):
            continue
        if any(nx.is_isomorphic(g, h) for h in found):
            continue
        found.append(g)
    return len(found)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_counts_against_independent_enumeration(n, corpus):
    assert len(corpus[n]) == _independent_census(n)


def test_to_networkx_preserves_structure():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    h = to_networkx(g)
    assert set(h.nodes) == set(range(4))
    assert {tuple(sorted(e)) for e in h.edges} == set(g.edges())
