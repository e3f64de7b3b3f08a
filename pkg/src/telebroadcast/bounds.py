"""Pathwidth-parameterized lower bounds on broadcast time.

For a connected graph of pathwidth w whose standardized path decomposition
has ell bags, the broadcast time from any source is at least
``27**-w * factorial(w)**-2 * (ell/2)**(4**-w)``.  Since bags hold at most
w + 1 vertices, ell is at least n / (w + 1), giving an n-based variant.
The bound degrades doubly-exponentially in w but grows with n for fixed
width, so bounded-pathwidth families cannot have bounded broadcast time.

Also here: the component-deletion inequality used to bound how much work
can hide behind a single vertex.  If broadcasting from v finishes in r
rounds, the components of g - v must themselves be cheap to cover, and
the sum of their own broadcast times is at most r * (2r + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .exact import exact_broadcast_time
from .graphs import Graph, connected_components, induced_subgraph

__all__ = [
    "DeletionCheck",
    "WidthBound",
    "check_deletion_inequality",
    "lower_bound_f",
    "lower_bound_from_n",
    "width_bound",
]


def lower_bound_f(ell: float, w: int) -> float:
    """The bound as a function of the bag count ell (monotone in ell)."""
    if ell < 1:
        raise ValueError(f"need at least one bag, got ell={ell}")
    if w < 1:
        raise ValueError(f"width must be positive, got {w}")
    return (27.0**-w) * float(factorial(w)) ** -2 * (ell / 2.0) ** (4.0**-w)


def lower_bound_from_n(n: int, w: int) -> float:
    """The bound with ell replaced by its guaranteed minimum n / (w + 1)."""
    if n < 2:
        raise ValueError(f"need at least two vertices, got {n}")
    if w < 1:
        raise ValueError(f"width must be positive, got {w}")
    return (27.0**-w) * float(factorial(w)) ** -2 * (n / (2.0 * (w + 1))) ** (4.0**-w)


@dataclass(frozen=True)
class WidthBound:
    """Bound record: ``f_value`` evaluates the formula at ``ell`` bags,
    ``n_based`` at the guaranteed minimum n / (width + 1) bags.  With a
    true ell the n-based value can only be lower."""

    width: int
    ell: float
    f_value: float
    n_based: float


def width_bound(w: int, n: int, ell: float | None = None) -> WidthBound:
    """Bound record for an n-vertex graph; pass ell when an actual
    decomposition length is known, otherwise it defaults to n / (w + 1)."""
    n_based = lower_bound_from_n(n, w)
    if ell is None:
        return WidthBound(w, n / (w + 1), n_based, n_based)
    return WidthBound(w, float(ell), lower_bound_f(ell, w), n_based)


@dataclass(frozen=True)
class DeletionCheck:
    removed: int
    broadcast_time: int
    component_times: tuple[int, ...]
    lhs: int
    rhs: int
    holds: bool


def check_deletion_inequality(
    g: Graph, v: int, sources: dict[int, int]
) -> DeletionCheck:
    """Evaluate the inequality for deleting v.

    ``sources`` assigns a broadcast source to each component of g - v,
    keyed by the component's smallest vertex.  Requires the deleted vertex
    to be a valid source and every component to be covered.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    rounds, _ = exact_broadcast_time(g, v)
    rest, rest_ids = induced_subgraph(g, [w for w in range(g.n) if w != v])
    times = []
    for comp in connected_components(rest):
        old = sorted(rest_ids[w] for w in comp)
        key = old[0]
        if key not in sources:
            raise ValueError(f"no source for the component containing {key}")
        s = sources[key]
        if s not in old:
            raise ValueError(f"source {s} is not in its component")
        sub, sub_ids = induced_subgraph(g, old)
        sub_rounds, _ = exact_broadcast_time(sub, sub_ids.index(s))
        times.append(sub_rounds)
    lhs = sum(times)
    rhs = rounds * (2 * rounds + 1)
    return DeletionCheck(v, rounds, tuple(times), lhs, rhs, lhs <= rhs)
