"""Cactus 2-approximation in the super-round (k = 2) calling model.

``single_source`` plans broadcasts by removing the current source, solving
each remaining component, and serving components one super round each in
nonincreasing order of their own times.  A component holding two neighbors
of the removed source is a former cycle: ``double_source`` opens it at the
best edge of the path between the two entry vertices and solves the halves
independently.

``single_source_fast`` computes identical values without re-solving the two
half-graphs for every candidate edge: hung subgraphs along the opened cycle
are timed once, and per candidate edge a running time is folded vertex by
vertex toward each source.  A memo keyed on (scope, entries) makes the
recursion polynomial even on chains of nested rings.

``build_schedule`` turns a plan into a verifiable k = 2 schedule, and
``cactus_broadcaster`` serializes it into the classic one-call-per-round
model, at most doubling the makespan.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cactus import CactusRejection, CycleStructure, decompose_cactus
from .graphs import Graph, is_connected
from .schedules import Call, CallSchedule, MultiCallSchedule, relax_to_classic

__all__ = [
    "ComponentPlan",
    "CycleSplit",
    "StepCounter",
    "build_schedule",
    "cactus_broadcaster",
    "double_source",
    "merge_component_times",
    "single_source",
    "single_source_fast",
]


@dataclass
class StepCounter:
    """Work counter for the fast planner's complexity envelope."""

    bfs_visits: int = 0
    merge_ops: int = 0
    memo_lookups: int = 0

    @property
    def total(self) -> int:
        return self.bfs_visits + self.merge_ops + self.memo_lookups


@dataclass(frozen=True)
class ComponentPlan:
    """Plan for broadcasting within ``vertices`` starting at ``entries``.

    Single-entry plans list ``children`` in serve order (child i's entries
    get called in super round i+1 after the entry is informed).  Two-entry
    plans carry the chosen ``split`` instead.
    """

    vertices: frozenset[int]
    entries: tuple[int, ...]
    super_rounds: int
    children: tuple["ComponentPlan", ...] = field(default_factory=tuple)
    split: "CycleSplit | None" = None


@dataclass(frozen=True)
class CycleSplit:
    """Opened former cycle: the excluded edge and the two half plans."""

    excluded_edge: tuple[int, int]
    left: ComponentPlan
    right: ComponentPlan


def merge_component_times(times: Iterable[int], counter: StepCounter | None = None) -> int:
    """Time to serve child components with the given times, one per super
    round, in the optimal (nonincreasing) order: max over the sorted list
    of (position + time), 0 when there are no children."""
    ordered = sorted(times, reverse=True)
    if counter is not None:
        counter.merge_ops += len(ordered) + 1
    return max((i + 1 + t for i, t in enumerate(ordered)), default=0)


def _scope_components(
    g: Graph, scope: frozenset[int], removed: int, counter: StepCounter | None
) -> list[frozenset[int]]:
    """Components of scope minus one vertex, ordered by smallest member."""
    seen = {removed}
    comps: list[frozenset[int]] = []
    for start in sorted(scope):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            if counter is not None:
                counter.bfs_visits += 1
            for w in g.adj[u]:
                if w in scope and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def _tree_path(g: Graph, scope: frozenset[int], a: int, b: int) -> list[int]:
    """The a-b path inside the scope (unique: callers guarantee every block
    between the endpoints is a bridge)."""
    prev = {a: a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for w in sorted(g.adj[u]):
            if w in scope and w not in prev:
                prev[w] = u
                queue.append(w)
    assert b in prev, "entry vertices must be connected within the scope"
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def _split_at_edge(
    g: Graph, scope: frozenset[int], u: int, v: int, s1: int, s2: int
) -> tuple[frozenset[int], frozenset[int]]:
    """Halves of the scope after deleting bridge (u, v); s1's side first."""
    side = {s1}
    queue = deque([s1])
    while queue:
        x = queue.popleft()
        for w in g.adj[x]:
            if w not in scope or w in side:
                continue
            if (x == u and w == v) or (x == v and w == u):
                continue
            side.add(w)
            queue.append(w)
    assert s2 not in side, "excluded edge must separate the two sources"
    return frozenset(side), frozenset(scope - side)


def _component_entries(g: Graph, comp: frozenset[int], removed: int) -> list[int]:
    entries = sorted(w for w in g.adj[removed] if w in comp)
    assert 1 <= len(entries) <= 2, "a cactus component offers 1 or 2 entries"
    return entries


# --- reference (naive) planner -------------------------------------------


def _naive_single(g: Graph, scope: frozenset[int], s: int) -> tuple[int, ComponentPlan]:
    timed: list[tuple[int, ComponentPlan]] = []
    for comp in _scope_components(g, scope, s, None):
        entries = _component_entries(g, comp, s)
        if len(entries) == 1:
            timed.append(_naive_single(g, comp, entries[0]))
        else:
            path = _tree_path(g, comp, entries[0], entries[1])
            timed.append(_naive_double(g, comp, entries[0], entries[1], path))
    timed.sort(key=lambda tp: (-tp[0], min(tp[1].vertices)))
    value = merge_component_times(t for t, _ in timed)
    plan = ComponentPlan(scope, (s,), value, tuple(p for _, p in timed))
    return value, plan


def _naive_double(
    g: Graph, scope: frozenset[int], s1: int, s2: int, path: Sequence[int]
) -> tuple[int, ComponentPlan]:
    best: tuple[int, tuple[int, int], ComponentPlan, ComponentPlan] | None = None
    for i in range(len(path) - 1):
        u, v = path[i], path[i + 1]
        left_scope, right_scope = _split_at_edge(g, scope, u, v, s1, s2)
        v1, p1 = _naive_single(g, left_scope, s1)
        v2, p2 = _naive_single(g, right_scope, s2)
        value = max(v1, v2)
        if best is None or value < best[0]:
            best = (value, (min(u, v), max(u, v)), p1, p2)
    assert best is not None
    value, edge, p1, p2 = best
    plan = ComponentPlan(scope, (s1, s2), value, (), CycleSplit(edge, p1, p2))
    return value, plan


# --- fast planner ----------------------------------------------------------


class _FastPlanner:
    def __init__(self, g: Graph, structure: CycleStructure, counter: StepCounter | None):
        self.g = g
        self.counter = counter
        self.memo: dict[tuple[frozenset[int], tuple[int, ...]], tuple[int, ComponentPlan]] = {}
        self.cycle_of_edge: dict[tuple[int, int], tuple[int, ...]] = {}
        for cycle in structure.cycles:
            for i, u in enumerate(cycle):
                v = cycle[(i + 1) % len(cycle)]
                self.cycle_of_edge[(min(u, v), max(u, v))] = cycle

    def _probe(self, key: tuple[frozenset[int], tuple[int, ...]]):
        if self.counter is not None:
            self.counter.memo_lookups += 1
        return self.memo.get(key)

    def _cycle_path(self, removed: int, e1: int, e2: int) -> list[int]:
        """The former-cycle path between the two entries: the cycle through
        (removed, e1), opened at the removed vertex."""
        cycle = self.cycle_of_edge[(min(removed, e1), max(removed, e1))]
        idx = cycle.index(removed)
        ring = list(cycle[idx + 1 :]) + list(cycle[:idx])
        if ring[0] != e1:
            ring.reverse()
        assert ring[0] == e1 and ring[-1] == e2, "entries must end the opened cycle"
        return ring

    def _component_plan(self, comp: frozenset[int], removed: int) -> tuple[int, ComponentPlan]:
        entries = _component_entries(self.g, comp, removed)
        if len(entries) == 1:
            return self.single(comp, entries[0])
        path = self._cycle_path(removed, entries[0], entries[1])
        return self.double(comp, entries[0], entries[1], path)

    def single(self, scope: frozenset[int], s: int) -> tuple[int, ComponentPlan]:
        key = (scope, (s,))
        hit = self._probe(key)
        if hit is not None:
            return hit
        timed = [
            self._component_plan(comp, s)
            for comp in _scope_components(self.g, scope, s, self.counter)
        ]
        timed.sort(key=lambda tp: (-tp[0], min(tp[1].vertices)))
        value = merge_component_times((t for t, _ in timed), self.counter)
        result = (value, ComponentPlan(scope, (s,), value, tuple(p for _, p in timed)))
        self.memo[key] = result
        return result

    def double(
        self, scope: frozenset[int], s1: int, s2: int, path: Sequence[int]
    ) -> tuple[int, ComponentPlan]:
        key = (scope, (s1, s2))
        hit = self._probe(key)
        if hit is not None:
            return hit
        on_path = set(path)
        hang_times: list[list[int]] = []
        for w in path:
            times = []
            for comp in _scope_components(self.g, scope, w, self.counter):
                if comp & on_path:
                    continue
                t, _ = self._component_plan(comp, w)
                times.append(t)
            hang_times.append(times)

        last = len(path) - 1
        best_value: int | None = None
        best_i = -1
        for i in range(last):
            acc = merge_component_times(hang_times[i], self.counter)
            for j in range(i - 1, -1, -1):
                acc = merge_component_times(hang_times[j] + [acc], self.counter)
            toward_s1 = acc
            acc = merge_component_times(hang_times[i + 1], self.counter)
            for j in range(i + 2, last + 1):
                acc = merge_component_times(hang_times[j] + [acc], self.counter)
            toward_s2 = acc
            value = max(toward_s1, toward_s2)
            if best_value is None or value < best_value:
                best_value, best_i = value, i
        assert best_value is not None

        u, v = path[best_i], path[best_i + 1]
        left_scope, right_scope = _split_at_edge(self.g, scope, u, v, s1, s2)
        v1, p1 = self.single(left_scope, s1)
        v2, p2 = self.single(right_scope, s2)
        assert max(v1, v2) == best_value, "folded value must match the re-solve"
        plan = ComponentPlan(
            scope, (s1, s2), best_value, (), CycleSplit((min(u, v), max(u, v)), p1, p2)
        )
        self.memo[key] = (best_value, plan)
        return best_value, plan


# --- public operations ------------------------------------------------------


def _validated_structure(g: Graph) -> CycleStructure:
    if not is_connected(g):
        raise ValueError("planner expects a connected graph")
    structure = decompose_cactus(g)
    if isinstance(structure, CactusRejection):
        raise ValueError(f"not a cactus: {structure.reason}")
    return structure


def single_source(g: Graph, s: int) -> tuple[int, ComponentPlan]:
    """Reference planner: super rounds needed from one source, plus the
    plan realizing them."""
    if not 0 <= s < g.n:
        raise ValueError(f"source {s} out of range for {g.n} vertices")
    _validated_structure(g)
    return _naive_single(g, frozenset(range(g.n)), s)


def double_source(g: Graph, s1: int, s2: int) -> tuple[int, CycleSplit]:
    """Best opening of the cut-edge path joining two already-informed
    sources: minimum over its edges of the worse half."""
    for s in (s1, s2):
        if not 0 <= s < g.n:
            raise ValueError(f"source {s} out of range for {g.n} vertices")
    if s1 == s2:
        raise ValueError("the two sources must differ")
    structure = _validated_structure(g)
    scope = frozenset(range(g.n))
    path = _tree_path(g, scope, s1, s2)
    for i in range(len(path) - 1):
        edge = (min(path[i], path[i + 1]), max(path[i], path[i + 1]))
        if edge not in structure.cut_edges:
            raise ValueError(
                f"sources must be joined by cut edges only; {edge} lies on a cycle"
            )
    value, plan = _naive_double(g, scope, s1, s2, path)
    assert plan.split is not None
    return value, plan.split


def single_source_fast(
    g: Graph, s: int, counter: StepCounter | None = None
) -> tuple[int, ComponentPlan]:
    """Accumulation-scheme planner; same values and plans as
    :func:`single_source`, polynomial even on nested rings."""
    if not 0 <= s < g.n:
        raise ValueError(f"source {s} out of range for {g.n} vertices")
    structure = _validated_structure(g)
    planner = _FastPlanner(g, structure, counter)
    return planner.single(frozenset(range(g.n)), s)


def build_schedule(plan: ComponentPlan) -> MultiCallSchedule:
    """Calls realizing a plan in the k = 2 super-round model.

    The entry of child i is called in super round i+1 after its parent
    entry was informed; a split child has both entries called that round
    (one two-call super round), and both halves then proceed from their own
    sources at that same entry round.
    """
    calls: list[Call] = []

    def emit(node: ComponentPlan, informed_round: int) -> None:
        source = node.entries[0]
        for i, child in enumerate(node.children):
            r = informed_round + i + 1
            for entry in child.entries:
                calls.append(Call(r, source, entry))
            if child.split is None:
                emit(child, r)
            else:
                emit(child.split.left, r)
                emit(child.split.right, r)

    assert len(plan.entries) == 1, "schedules are built from single-source plans"
    emit(plan, 0)
    schedule = MultiCallSchedule(source=plan.entries[0], k=2, calls=tuple(sorted(calls)))
    assert schedule.makespan == plan.super_rounds
    return schedule


def cactus_broadcaster(g: Graph, s: int) -> CallSchedule:
    """End-to-end 2-approximation: plan fast, realize in super rounds,
    serialize to the classic model (verifying along the way)."""
    _, plan = single_source_fast(g, s)
    return relax_to_classic(build_schedule(plan), g)
