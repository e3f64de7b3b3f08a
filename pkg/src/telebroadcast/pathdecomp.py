"""Path decompositions: validation, normal form, and the width-2
construction for snowflake graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .graphs import Graph

if TYPE_CHECKING:  # pragma: no cover - import cycle guard, typing only
    from .snowflake import SnowflakeCertificate

__all__ = [
    "DecompositionRejection",
    "PathDecomposition",
    "snowflake_decomposition",
    "standardize_decomposition",
    "validate_decomposition",
]


@dataclass(frozen=True)
class PathDecomposition:
    """Sequence of vertex bags; width is the largest bag size minus one."""

    bags: tuple[frozenset[int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


@dataclass(frozen=True)
class DecompositionRejection:
    reason: str
    witness_vertex: int | None = None
    witness_edge: tuple[int, int] | None = None


def validate_decomposition(
    g: Graph, decomposition: PathDecomposition
) -> int | DecompositionRejection:
    """Check the three path-decomposition axioms against a graph.

    Returns the width on success; otherwise a rejection naming the first
    uncovered vertex, uncovered edge, or contiguity-breaking vertex.
    """
    bags = decomposition.bags
    occurrences: dict[int, list[int]] = {}
    for idx, bag in enumerate(bags):
        for v in bag:
            if not 0 <= v < g.n:
                return DecompositionRejection(
                    reason=f"bag {idx} contains unknown vertex {v}",
                    witness_vertex=v,
                )
            occurrences.setdefault(v, []).append(idx)
    for v in range(g.n):
        if v not in occurrences:
            return DecompositionRejection(
                reason=f"vertex {v} appears in no bag", witness_vertex=v
            )
    for u, v in g.edges():
        if not any(u in bag and v in bag for bag in bags):
            return DecompositionRejection(
                reason=f"edge ({u}, {v}) is contained in no bag",
                witness_edge=(u, v),
            )
    for v, idxs in sorted(occurrences.items()):
        if idxs[-1] - idxs[0] + 1 != len(idxs):
            return DecompositionRejection(
                reason=f"bags containing vertex {v} are not contiguous",
                witness_vertex=v,
            )
    return decomposition.width


def standardize_decomposition(decomposition: PathDecomposition) -> PathDecomposition:
    """Drop bags that are subsets of an adjacent bag.

    Single left-to-right pass: a new bag first swallows any preceding bags
    it contains, then is itself skipped if the surviving predecessor
    contains it.  Idempotent; width never increases.
    """
    out: list[frozenset[int]] = []
    for bag in decomposition.bags:
        while out and out[-1] <= bag:
            out.pop()
        if out and bag <= out[-1]:
            continue
        out.append(bag)
    return PathDecomposition(tuple(out))


def snowflake_decomposition(cert: "SnowflakeCertificate") -> PathDecomposition:
    """Width-2 path decomposition read off a snowflake certificate.

    Each caterpillar contributes its spine edges as 2-vertex bags, with one
    extra bag per pendant leaf inserted where the spine passes the anchor;
    the center is then added to every bag.  No graph is consulted — the
    certificate carries the spine and pendant lists.
    """
    bags: list[frozenset[int]] = []
    for cat in cert.caterpillars:
        spine = cat.spine
        local: list[frozenset[int]] = []
        for i, v in enumerate(spine):
            if i > 0:
                local.append(frozenset({spine[i - 1], v}))
            if v == cat.anchor:
                for leaf in sorted(cat.pendants):
                    local.append(frozenset({cat.anchor, leaf}))
        if not local:
            local.append(frozenset({spine[0]}))
        bags.extend(local)
    center = cert.center
    return PathDecomposition(tuple(frozenset(b | {center}) for b in bags))
