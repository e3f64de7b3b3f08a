from __future__ import annotations

from telebroadcast.graphs import Graph, generate
from telebroadcast.pathdecomp import (
    DecompositionRejection,
    PathDecomposition,
    snowflake_decomposition,
    standardize_decomposition,
    validate_decomposition,
)
from telebroadcast.snowflake import SnowflakeCertificate, recognize_snowflake

PATH4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def _bags(*groups):
    return PathDecomposition(tuple(frozenset(g) for g in groups))


def test_valid_path_decomposition():
    d = _bags({0, 1}, {1, 2}, {2, 3})
    assert validate_decomposition(PATH4, d) == 1
    assert d.width == 1


def test_missing_vertex_rejected():
    d = _bags({0, 1}, {1, 2})
    r = validate_decomposition(PATH4, d)
    assert isinstance(r, DecompositionRejection)
    assert r.witness_vertex == 3


def test_uncovered_edge_rejected():
    d = _bags({0, 1}, {1, 2}, {3})
    r = validate_decomposition(PATH4, d)
    assert isinstance(r, DecompositionRejection)
    assert r.witness_edge == (2, 3)


def test_gap_in_occurrences_rejected():
    d = _bags({0, 1}, {1, 2}, {2, 3}, {0})
    r = validate_decomposition(PATH4, d)
    assert isinstance(r, DecompositionRejection)
    assert r.witness_vertex == 0
    assert "contiguous" in r.reason


def test_unknown_vertex_rejected():
    r = validate_decomposition(PATH4, _bags({0, 9}))
    assert isinstance(r, DecompositionRejection)
    assert r.witness_vertex == 9


def test_standardize_drops_redundant_bags():
    d = _bags({0, 1}, {1}, {1, 2}, {1, 2}, {2, 3}, {3})
    slim = standardize_decomposition(d)
    assert slim.bags == (frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3}))
    assert standardize_decomposition(slim) == slim
    assert validate_decomposition(PATH4, slim) == 1


def test_standardize_swallows_preceding_subsets():
    d = _bags({1}, {0, 1})
    assert standardize_decomposition(d).bags == (frozenset({0, 1}),)


def test_snowflake_decomposition_has_width_two():
    for seed in range(25):
        g = generate(
            "snowflake_random", {"caterpillars": 1 + seed % 4}, rng_seed=seed
        )
        cert = recognize_snowflake(g)
        assert isinstance(cert, SnowflakeCertificate)
        d = snowflake_decomposition(cert)
        width = validate_decomposition(g, d)
        assert width == 2
        # standardizing keeps it valid and never widens it
        slim = standardize_decomposition(d)
        assert validate_decomposition(g, slim) == 2
