"""Simple undirected graphs: construction, text serialization, generators.

Vertices are the integers ``0..n-1``.  Graphs are immutable values; every
operation in the package treats them as such.  The text format is line
oriented: a header ``p edge <n> <m>`` followed by one ``e <u> <v>`` line per
edge, 0-based ids, LF endings.  Duplicate edges are rejected on parse and on
construction.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

__all__ = [
    "Graph",
    "GENERATOR_KINDS",
    "connected_components",
    "format_graph",
    "generate",
    "induced_subgraph",
    "is_connected",
    "parse_graph",
]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus per-vertex neighbor sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table size does not match vertex count")
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of vertex {u} is out of range")
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if u not in self.adj[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
        return Graph(n, tuple(frozenset(s) for s in adj))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, in sorted order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components as vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    out: list[frozenset[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = {start}
        seen[start] = True
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices`` plus the new-id -> old-id table.

    Vertices are relabeled 0.. in ascending original order.
    """
    old_ids = sorted(set(vertices))
    if not old_ids:
        raise ValueError("cannot induce a subgraph on no vertices")
    index = {v: i for i, v in enumerate(old_ids)}
    keep = set(old_ids)
    edges = [
        (index[u], index[v])
        for u in old_ids
        for v in g.adj[u]
        if u < v and v in keep
    ]
    return Graph.from_edges(len(old_ids), edges), old_ids


# --------------------------------------------------------------------------
# text format


def format_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n = -1
    declared_m = -1
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n >= 0:
                raise ValueError(f"line {lineno}: repeated header")
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"line {lineno}: header must be 'p edge <n> <m>'")
            n, declared_m = int(parts[2]), int(parts[3])
            if n < 1 or declared_m < 0:
                raise ValueError(f"line {lineno}: bad header counts")
        elif parts[0] == "e":
            if n < 0:
                raise ValueError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: edge line must be 'e <u> <v>'")
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"line {lineno}: unknown record {parts[0]!r}")
    if n < 0:
        raise ValueError("missing 'p edge' header")
    if len(edges) != declared_m:
        raise ValueError(
            f"header declares {declared_m} edges but {len(edges)} are present"
        )
    return Graph.from_edges(n, edges)


# --------------------------------------------------------------------------
# generators

GENERATOR_KINDS = (
    "path",
    "star",
    "cycle",
    "fan",
    "random_tree",
    "random_cactus",
    "snowflake_random",
)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _gen_path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _gen_star(n: int) -> Graph:
    _require(n >= 1, "star needs n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def _gen_cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _gen_fan(n: int) -> Graph:
    """Path of ``n`` vertices, all adjacent to one extra hub vertex ``n``."""
    _require(n >= 1, "fan needs n >= 1")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges.extend((i, n) for i in range(n))
    return Graph.from_edges(n + 1, edges)


def _gen_random_tree(n: int, rng: random.Random) -> Graph:
    _require(n >= 1, "random_tree needs n >= 1")
    if n == 1:
        return Graph(1, (frozenset(),))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def _gen_random_cactus(n: int, rng: random.Random) -> Graph:
    """Grow a connected cactus by repeatedly hanging a pendant edge or a
    fresh cycle off an existing vertex."""
    _require(n >= 1, "random_cactus needs n >= 1")
    edges: list[tuple[int, int]] = []
    size = 1
    while size < n:
        room = n - size
        v = rng.randrange(size)
        if room >= 2 and rng.random() < 0.45:
            c = rng.randint(3, min(room + 1, 6))
            ring = [v] + [size + i for i in range(c - 1)]
            for i in range(len(ring) - 1):
                edges.append((ring[i], ring[i + 1]))
            edges.append((ring[-1], ring[0]))
            size += c - 1
        else:
            edges.append((v, size))
            size += 1
    return Graph.from_edges(n, edges)


def _gen_snowflake(params: Mapping[str, int], rng: random.Random) -> Graph:
    """A random center-plus-caterpillars graph.

    Each branch is a tree made of a spine path with optional pendant leaves
    hanging off one anchor vertex; the center (vertex 0) attaches to two
    branch vertices that are neither the spine endpoints nor the anchor.
    """
    cats = int(params.get("caterpillars", rng.randint(1, 3)))
    max_spine = int(params.get("max_spine", 6))
    max_pendants = int(params.get("max_pendants", 3))
    _require(cats >= 1, "snowflake_random needs caterpillars >= 1")
    _require(max_spine >= 1 and max_pendants >= 0, "invalid size parameters")
    edges: list[tuple[int, int]] = []
    next_id = 1
    for _ in range(cats):
        spine_len = rng.randint(1, max_spine)
        spine = list(range(next_id, next_id + spine_len))
        next_id += spine_len
        for i in range(spine_len - 1):
            edges.append((spine[i], spine[i + 1]))
        anchor = spine[rng.randrange(spine_len)]
        pendants: list[int] = []
        for _ in range(rng.randint(0, max_pendants)):
            pendants.append(next_id)
            edges.append((anchor, next_id))
            next_id += 1
        special = {spine[0], spine[-1], anchor}
        eligible = [v for v in spine + pendants if v not in special]
        while len(eligible) < 2:
            pendants.append(next_id)
            edges.append((anchor, next_id))
            eligible.append(next_id)
            next_id += 1
        attach = rng.sample(eligible, 2)
        edges.append((0, attach[0]))
        edges.append((0, attach[1]))
    return Graph.from_edges(next_id, edges)


def generate(
    kind: str,
    params: Mapping[str, int] | int | None = None,
    rng_seed: int = 0,
) -> Graph:
    """Build a named instance family member, deterministic for a fixed seed.

    ``params`` is either a mapping of named sizes or a bare ``n``.
    """
    if kind not in GENERATOR_KINDS:
        raise ValueError(f"unknown generator kind {kind!r}")
    if params is None:
        params = {}
    elif isinstance(params, int):
        params = {"n": params}
    rng = random.Random(rng_seed)
    if kind == "snowflake_random":
        return _gen_snowflake(params, rng)
    n = int(params.get("n", 0))
    _require(n >= 1, f"{kind} needs a positive n parameter")
    if kind == "path":
        return _gen_path(n)
    if kind == "star":
        return _gen_star(n)
    if kind == "cycle":
        return _gen_cycle(n)
    if kind == "fan":
        return _gen_fan(n)
    if kind == "random_tree":
        return _gen_random_tree(n, rng)
    return _gen_random_cactus(n, rng)
