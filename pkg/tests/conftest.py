from __future__ import annotations

import random

import pytest

from telebroadcast.corpus import exhaustive_cacti
from telebroadcast.graphs import Graph, generate


@pytest.fixture(scope="session")
def small_cacti() -> dict[int, list[Graph]]:
    """Every connected cactus (up to isomorphism) with at most 9 vertices."""
    return exhaustive_cacti(9)


@pytest.fixture(scope="session")
def random_cacti() -> list[Graph]:
    """500 seeded random cacti with 4..12 vertices."""
    rng = random.Random(20240911)
    out = []
    for seed in range(500):
        n = rng.randint(4, 12)
        out.append(generate("random_cactus", n, rng_seed=seed))
    return out
