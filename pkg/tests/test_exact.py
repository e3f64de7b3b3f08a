from __future__ import annotations

import math
import random

import pytest

from support import brute_broadcast_time
from telebroadcast.exact import (
    BudgetExhausted,
    SearchBudget,
    can_broadcast_within,
    default_node_limit,
    exact_broadcast_time,
    tree_broadcast_time,
)
from telebroadcast.graphs import Graph, generate
from telebroadcast.schedules import verify


def test_known_small_values():
    # path: farthest vertex dominates; star: one callee per round
    assert exact_broadcast_time(generate("path", 5), 0)[0] == 4
    assert exact_broadcast_time(generate("path", 5), 2)[0] == 2 + 1  # both arms
    assert exact_broadcast_time(generate("star", 6), 0)[0] == 5
    assert exact_broadcast_time(generate("cycle", 6), 0)[0] == 3
    assert exact_broadcast_time(Graph(1, (frozenset(),)), 0)[0] == 0


def test_witness_is_always_verified_and_tight():
    g = generate("random_cactus", 10, rng_seed=8)
    rounds, schedule = exact_broadcast_time(g, 0)
    checked = verify(g, schedule)
    assert checked.accepted and checked.makespan == rounds
    assert can_broadcast_within(g, 0, rounds - 1) is None


def test_matches_unpruned_search_on_all_tiny_cacti(small_cacti):
    """The production search normalizes rounds (no useful idling); the brute
    oracle does not.  They must agree everywhere."""
    for n in range(1, 8):
        for g in small_cacti[n]:
            for s in range(g.n):
                assert exact_broadcast_time(g, s)[0] == brute_broadcast_time(g, s)


def test_matches_unpruned_search_on_dense_graphs():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 6)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        keep = [e for e in edges if rng.random() < 0.7]
        g = Graph.from_edges(n, keep)
        # keep only connected samples
        from telebroadcast.graphs import is_connected

        if not is_connected(g):
            continue
        s = rng.randrange(n)
        assert exact_broadcast_time(g, s)[0] == brute_broadcast_time(g, s)


def test_lower_bound_log2():
    for n in (2, 5, 9, 16):
        g = generate("path", n)
        assert exact_broadcast_time(g, 0)[0] >= math.ceil(math.log2(n))


def test_budget_exhaustion_raises():
    g = generate("random_cactus", 12, rng_seed=0)
    with pytest.raises(BudgetExhausted):
        exact_broadcast_time(g, 0, SearchBudget(max_rounds=11, node_limit=5))


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_rounds=0, node_limit=10)
    with pytest.raises(ValueError):
        SearchBudget(max_rounds=3, node_limit=0)


def test_rejects_oversized_and_disconnected_inputs():
    big = generate("path", 63)
    with pytest.raises(ValueError, match="at most 62"):
        exact_broadcast_time(big, 0)
    two = Graph(2, (frozenset(), frozenset()))
    with pytest.raises(ValueError, match="connected"):
        exact_broadcast_time(two, 0)
    with pytest.raises(ValueError, match="out of range"):
        exact_broadcast_time(generate("path", 3), 5)


def test_sixty_two_vertex_path_is_in_range():
    g = generate("path", 62)
    assert exact_broadcast_time(g, 0)[0] == 61


def test_can_broadcast_within_boundaries():
    g = generate("star", 4)
    assert can_broadcast_within(g, 0, 2) is None
    schedule = can_broadcast_within(g, 0, 3)
    assert schedule is not None and verify(g, schedule).accepted
    assert can_broadcast_within(Graph(1, (frozenset(),)), 0, 0) is not None
    with pytest.raises(ValueError):
        can_broadcast_within(g, 0, -1)


def test_default_node_limit_env_override(monkeypatch):
    monkeypatch.setenv("TELEBROADCAST_NODE_LIMIT", "1234")
    assert default_node_limit() == 1234
    monkeypatch.setenv("TELEBROADCAST_NODE_LIMIT", "junk")
    with pytest.raises(ValueError):
        default_node_limit()
    monkeypatch.delenv("TELEBROADCAST_NODE_LIMIT")
    assert default_node_limit() > 0


def test_tree_solver_agrees_with_exact():
    for seed in range(60):
        g = generate("random_tree", 11, rng_seed=seed)
        s = seed % g.n
        rounds, schedule = tree_broadcast_time(g, s)
        checked = verify(g, schedule)
        assert checked.accepted and checked.makespan == rounds
        assert rounds == exact_broadcast_time(g, s)[0]


def test_tree_solver_rejects_cycles():
    with pytest.raises(ValueError, match="acyclic"):
        tree_broadcast_time(generate("cycle", 4), 0)


def test_tree_solver_scales_past_kernel_cap():
    g = generate("random_tree", 500, rng_seed=1)
    rounds, schedule = tree_broadcast_time(g, 0)
    checked = verify(g, schedule)
    assert checked.accepted and checked.makespan == rounds
