"""Snowflake recognition.

A snowflake is a connected graph with a center vertex whose removal leaves
disjoint reduced caterpillars, the center attaching to exactly two
non-special vertices of each.  A reduced caterpillar is a tree with three
special vertices x, y, z (not necessarily distinct) such that every vertex
lies on the x-y path or is adjacent to z.

The recognizer returns a certificate carrying, per caterpillar, the full
spine (the x-y path) and the pendant leaves hanging off the anchor z, so
that the width-2 path decomposition can be read off without consulting the
graph again.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, is_connected

__all__ = [
    "CaterpillarCertificate",
    "SnowflakeCertificate",
    "SnowflakeRejection",
    "recognize_snowflake",
]

# Below this size every vertex is tried as a center, so rejections carry a
# reason for each vertex.  Larger graphs restrict candidates to vertices
# lying on every fundamental cycle (a center lies on every cycle: removing
# it must leave trees).
_EXHAUSTIVE_CENTER_LIMIT = 256


@dataclass(frozen=True)
class CaterpillarCertificate:
    """One component of the center's removal, certified as a reduced
    caterpillar.

    ``spine`` is the x-y path in order (``spine_start`` = x,
    ``spine_end`` = y); ``pendants`` are the remaining vertices, each a
    degree-1 neighbor of ``anchor`` (= z).
    """

    vertices: frozenset[int]
    spine_start: int
    spine_end: int
    anchor: int
    attachments: tuple[int, int]
    spine: tuple[int, ...]
    pendants: tuple[int, ...]


@dataclass(frozen=True)
class SnowflakeCertificate:
    center: int
    caterpillars: tuple[CaterpillarCertificate, ...]


@dataclass(frozen=True)
class SnowflakeRejection:
    """Why no vertex qualifies as a center.

    ``candidates`` pairs each examined candidate center with the first
    condition it failed.
    """

    reason: str
    candidates: tuple[tuple[int, str], ...]


def _components_without(g: Graph, banned: int) -> list[frozenset[int]]:
    seen = {banned}
    comps: list[frozenset[int]] = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def _walk_path(adj: dict[int, list[int]], vertices: set[int]) -> list[int]:
    """Vertex order of a path-shaped subtree, from its smallest endpoint."""
    if len(vertices) == 1:
        return [next(iter(vertices))]
    ends = [v for v in vertices if len(adj[v]) <= 1]
    order = [min(ends)]
    prev = -1
    while len(order) < len(vertices):
        cur = order[-1]
        nxt = next(w for w in adj[cur] if w != prev)
        prev = cur
        order.append(nxt)
    return order


def _extend_past_attachment(
    adj: dict[int, list[int]],
    start: int,
    banned: int | None,
    attachments: set[int],
) -> list[int] | None:
    """Depth-first path from ``start`` (exclusive) to the first vertex that
    is not an attachment, never stepping toward ``banned``.  ``None`` when
    every reachable vertex is an attachment."""
    stack: list[tuple[int, int]] = []
    for w in sorted(adj[start], reverse=True):
        if w != banned:
            stack.append((w, start))
    parent = {start: start}
    while stack:
        v, par = stack.pop()
        parent[v] = par
        if v not in attachments:
            path = [v]
            while path[-1] != start:
                path.append(parent[path[-1]])
            path.reverse()
            return path[1:]
        for w in sorted(adj[v], reverse=True):
            if w != par:
                stack.append((w, v))
    return None


def _try_anchor(
    comp: frozenset[int],
    adj: dict[int, list[int]],
    anchor: int,
    attachments: tuple[int, int],
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Spine and pendants for a fixed anchor, or None when no x-y path
    covers everything the anchor's neighborhood misses."""
    att = set(attachments)
    must_cover = comp - set(adj[anchor])  # vertices needing the x-y path
    # Minimal subtree spanning must_cover: strip leaves outside it.
    degree = {v: len(adj[v]) for v in comp}
    removed: set[int] = set()
    queue = deque(v for v in comp if degree[v] <= 1 and v not in must_cover)
    while queue:
        v = queue.popleft()
        if v in removed:
            continue
        removed.add(v)
        for w in adj[v]:
            if w in removed:
                continue
            degree[w] -= 1
            if degree[w] == 1 and w not in must_cover:
                queue.append(w)
    span = {v for v in comp if v not in removed}
    span_adj = {v: [w for w in adj[v] if w in span] for v in span}
    if any(len(ws) > 2 for ws in span_adj.values()):
        return None
    path = _walk_path(span_adj, span)

    extensions: list[list[int]] = []
    for end_idx in (0, -1):
        end = path[end_idx]
        if end not in att:
            extensions.append([])
            continue
        banned = None
        if len(path) > 1:
            banned = path[1] if end_idx == 0 else path[-2]
        ext = _extend_past_attachment(adj, end, banned, att)
        if ext is None:
            return None
        extensions.append(ext)
    spine = list(reversed(extensions[0])) + path + extensions[1]

    on_spine = set(spine)
    pendants = sorted(comp - on_spine)
    for leaf in pendants:
        assert adj[leaf] == [anchor], "off-spine vertex must hang off the anchor"
    return tuple(spine), tuple(pendants)


def _certify_path_component(
    comp: frozenset[int],
    adj: dict[int, list[int]],
    attachments: tuple[int, int],
) -> CaterpillarCertificate | str:
    order = _walk_path(adj, set(comp))
    att = set(attachments)
    first_in = order[0] in att
    last_in = order[-1] in att
    if not first_in and not last_in:
        spine, pendants = tuple(order), ()
        anchor = order[0]
    elif first_in and last_in:
        if len(order) != 3:
            return (
                "both path endpoints are attachments, so both must hang off "
                "the anchor, which only a 3-vertex path allows"
            )
        anchor = order[1]
        spine, pendants = (anchor,), tuple(sorted((order[0], order[-1])))
    else:
        if last_in:
            order.reverse()
        anchor = order[1]
        if anchor in att:
            return (
                f"endpoint {order[0]} is an attachment and so is its only "
                "neighbor, leaving no valid anchor"
            )
        spine, pendants = tuple(order[1:]), (order[0],)
    return CaterpillarCertificate(
        vertices=comp,
        spine_start=spine[0],
        spine_end=spine[-1],
        anchor=anchor,
        attachments=attachments,
        spine=spine,
        pendants=pendants,
    )


def _certify_caterpillar(
    g: Graph, comp: frozenset[int], attachments: tuple[int, int]
) -> CaterpillarCertificate | str:
    adj = {v: sorted(g.adj[v] & comp) for v in comp}
    if all(len(ws) <= 2 for ws in adj.values()):
        return _certify_path_component(comp, adj, attachments)
    # A spine covers at most its two endpoints among the leaves, so the
    # anchor must be adjacent to all but two of them: few candidates.
    leaves = [v for v in comp if len(adj[v]) == 1]
    threshold = len(leaves) - 2
    leaf_set = set(leaves)
    att = set(attachments)
    candidates = sorted(
        v
        for v in comp
        if v not in att and sum(w in leaf_set for w in adj[v]) >= threshold
    )
    for anchor in candidates:
        found = _try_anchor(comp, adj, anchor, attachments)
        if found is not None:
            spine, pendants = found
            return CaterpillarCertificate(
                vertices=comp,
                spine_start=spine[0],
                spine_end=spine[-1],
                anchor=anchor,
                attachments=attachments,
                spine=spine,
                pendants=pendants,
            )
    return "no anchor admits a spine covering the rest of the component"


def _check_center(g: Graph, center: int) -> SnowflakeCertificate | str:
    comps = _components_without(g, center)
    if not comps:
        return "removing the center leaves no components"
    cats: list[CaterpillarCertificate] = []
    for comp in sorted(comps, key=min):
        label = f"component containing vertex {min(comp)}"
        attach = sorted(g.adj[center] & comp)
        if len(attach) != 2:
            return f"{label}: center attaches to {len(attach)} vertices, need exactly 2"
        edges_within = sum(len(g.adj[v] & comp) for v in comp) // 2
        if edges_within != len(comp) - 1:
            return f"{label}: contains a cycle, so it is not a tree"
        cat = _certify_caterpillar(g, comp, (attach[0], attach[1]))
        if isinstance(cat, str):
            return f"{label}: {cat}"
        cats.append(cat)
    return SnowflakeCertificate(center=center, caterpillars=tuple(cats))


def _cycle_restricted_pool(g: Graph) -> list[int] | SnowflakeRejection:
    """Vertices lying on every fundamental cycle (superset of the possible
    centers), or a rejection when the graph has no cycle or no such vertex."""
    parent = [-1] * g.n
    depth = [0] * g.n
    order: list[int] = []
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in sorted(g.adj[u]):
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                depth[w] = depth[u] + 1
                queue.append(w)

    pool: set[int] | None = None
    for u in range(g.n):
        for w in g.adj[u]:
            if u < w and parent[w] != u and parent[u] != w:
                a, b = u, w
                cycle = set()
                while depth[a] > depth[b]:
                    cycle.add(a)
                    a = parent[a]
                while depth[b] > depth[a]:
                    cycle.add(b)
                    b = parent[b]
                while a != b:
                    cycle.add(a)
                    cycle.add(b)
                    a = parent[a]
                    b = parent[b]
                cycle.add(a)
                pool = cycle if pool is None else pool & cycle
                if pool is not None and not pool:
                    return SnowflakeRejection(
                        reason=(
                            "no vertex lies on every cycle, but removing a "
                            "center must leave acyclic components"
                        ),
                        candidates=(),
                    )
    if pool is None:
        return SnowflakeRejection(
            reason="graph is acyclic; each caterpillar induces a cycle "
            "through the center",
            candidates=(),
        )
    return sorted(pool)


def recognize_snowflake(g: Graph) -> SnowflakeCertificate | SnowflakeRejection:
    """Find a snowflake center, or explain why each candidate fails.

    Small graphs try every vertex; larger ones only vertices on every
    fundamental cycle, which any center must be.  The first qualifying
    center (in ascending vertex order) wins.
    """
    if not is_connected(g):
        raise ValueError("recognize_snowflake expects a connected graph")
    if g.n <= _EXHAUSTIVE_CENTER_LIMIT:
        pool: list[int] = list(range(g.n))
    else:
        restricted = _cycle_restricted_pool(g)
        if isinstance(restricted, SnowflakeRejection):
            return restricted
        pool = restricted
    failures: list[tuple[int, str]] = []
    for v in pool:
        res = _check_center(g, v)
        if isinstance(res, SnowflakeCertificate):
            return res
        failures.append((v, res))
    return SnowflakeRejection(
        reason="no vertex qualifies as a snowflake center",
        candidates=tuple(failures),
    )
