"""Dome-shift instances as broadcast graphs.

Each dome becomes a cycle through the broadcast center whose two center
neighbors (u on the early side, v on the late side) must be called at
rounds that shift the chosen arc's endpoints: with deadline 2m, a chain of
length 2m - t hanging behind a neighbor forces that neighbor to hear the
message by round t.  Branching domes add a junction vertex z on the cycle
with pendant leaves; covering the pendants in time is possible only when
(u at or before a) or (v at or before c), which is exactly the outer/inner
arc choice.  Center call rounds across domes collide unless the shifted
endpoints are all distinct, mirroring the slot condition.
"""

from __future__ import annotations

from ..graphs import Graph
from ..instances import Dome, DomeInstance, DomeSelection, selection_fits
from ..oracles import cds_check_selection
from ..schedules import Call, CallSchedule
from .trace import ReductionTrace

__all__ = [
    "cds_solution_to_schedule",
    "cds_to_graph",
    "schedule_to_cds_solution",
]

STAGE = "cds_to_graph"

Shifts = tuple[tuple[int, int], ...]


def cds_to_graph(
    inst: DomeInstance, parent: ReductionTrace | None = None
) -> tuple[Graph, ReductionTrace]:
    """Broadcast graph with source 0 and deadline ``2 * inst.m``.

    Per dome: a center cycle u - main... - v with a tail of ``2m - b``
    vertices behind u and ``2m - d`` behind v (singletons use their two
    endpoints), plus pendant leaves on the junction z for branching domes.
    """
    if not inst.domes:
        raise ValueError("need at least one dome")
    horizon = 2 * inst.m
    edges: list[tuple[int, int]] = []
    records: list[dict] = []
    next_id = 1
    for dome in inst.domes:
        a, b, c, d = dome.endpoints
        if dome.singleton:
            head, rear = horizon - a, horizon - c
            main = list(range(next_id, next_id + head + rear))
            next_id += head + rear
            z = None
            pendants: list[int] = []
            tail_u_len, tail_v_len = head, rear
        else:
            head, rear = horizon - b, horizon - d
            main = list(range(next_id, next_id + rear + head + 1))
            next_id += rear + head + 1
            z = main[head]
            tail_u_len, tail_v_len = head, rear
        tail_u = list(range(next_id, next_id + tail_u_len))
        next_id += tail_u_len
        tail_v = list(range(next_id, next_id + tail_v_len))
        next_id += tail_v_len
        if not dome.singleton:
            pendants = list(range(next_id, next_id + (b - a)))
            next_id += b - a
        u, v = main[0], main[-1]
        edges.append((0, u))
        edges.append((0, v))
        edges.extend(zip(main, main[1:]))
        edges.append((u, tail_u[0]))
        edges.extend(zip(tail_u, tail_u[1:]))
        edges.append((v, tail_v[0]))
        edges.extend(zip(tail_v, tail_v[1:]))
        if z is not None:
            edges.extend((z, w) for w in pendants)
        records.append(
            {
                "endpoints": [a, b, c, d],
                "singleton": dome.singleton,
                "u": u,
                "v": v,
                "z": z,
                "p": tail_u[-1],
                "q": tail_v[-1],
                "main": main,
                "tail_u": tail_u,
                "tail_v": tail_v,
                "pendants": pendants,
            }
        )
    graph = Graph.from_edges(next_id, edges)
    trace = ReductionTrace(
        STAGE,
        {
            "m": inst.m,
            "horizon": horizon,
            "source": 0,
            "vertex_count": next_id,
            "domes": records,
        },
        parent=parent,
    )
    return graph, trace


def _domes_from_trace(data: dict) -> DomeInstance:
    domes = tuple(
        Dome(*rec["endpoints"], singleton=rec["singleton"]) for rec in data["domes"]
    )
    return DomeInstance(domes, data["m"])


def _chain(calls: list[Call], first_caller: int, vertices: list[int], first_round: int) -> None:
    caller = first_caller
    rnd = first_round
    for w in vertices:
        calls.append(Call(rnd, caller, w))
        caller = w
        rnd += 1


def cds_solution_to_schedule(
    inst: DomeInstance,
    sel: DomeSelection,
    shifts: Shifts,
    trace: ReductionTrace,
) -> CallSchedule:
    """Schedule meeting the deadline: the center calls u at the shifted
    start and v at the shifted end of each chosen arc, and each dome is
    swept from its two entry points."""
    data = trace.find(STAGE).data
    if inst != _domes_from_trace(data):
        raise ValueError("trace does not describe this instance")
    if not selection_fits(inst, sel):
        raise ValueError("selection does not fit the instance")
    if len(shifts) != len(inst.domes):
        raise ValueError(f"{len(shifts)} shift pairs for {len(inst.domes)} domes")
    flat = [t for pair in shifts for t in pair]
    if len(set(flat)) != len(flat):
        raise ValueError("shift targets must be distinct")

    horizon = data["horizon"]
    calls: list[Call] = []
    for rec, dome, pick, (x, y) in zip(data["domes"], inst.domes, sel.outer, shifts):
        start, end = dome.outer if pick else dome.inner
        if not (1 <= x <= start and 1 <= y <= end):
            raise ValueError(
                f"shift ({x}, {y}) must move the arc ({start}, {end}) earlier, not later"
            )
        a, b, _, d = rec["endpoints"]
        main, tail_u, tail_v = rec["main"], rec["tail_u"], rec["tail_v"]
        u, v = rec["u"], rec["v"]
        last = len(main) - 1
        calls.append(Call(x, 0, u))
        calls.append(Call(y, 0, v))
        if rec["singleton"]:
            head = horizon - a
            _chain(calls, u, tail_u, x + 1)
            _chain(calls, u, main[1:head], x + 2)
            _chain(calls, v, tail_v, y + 1)
            _chain(calls, v, list(reversed(main[head:last])), y + 2)
            continue
        head, rear = horizon - b, horizon - d
        z = rec["z"]
        if pick:
            # Outer arc: u runs straight to z, then z feeds the pendants.
            _chain(calls, u, main[1 : head + 1], x + 1)
            _chain(calls, u, tail_u, x + 2)
            for offset, w in enumerate(rec["pendants"]):
                calls.append(Call(x + head + 1 + offset, z, w))
            _chain(calls, v, tail_v, y + 1)
            _chain(calls, v, list(reversed(main[head + 1 : last])), y + 2)
        else:
            # Inner arc: v sweeps the long way around to z instead.
            _chain(calls, u, tail_u, x + 1)
            _chain(calls, u, main[1:head], x + 2)
            _chain(calls, v, list(reversed(main[head:last])), y + 1)
            for offset, w in enumerate(rec["pendants"]):
                calls.append(Call(y + rear + 1 + offset, z, w))
            _chain(calls, v, tail_v, y + 2)

    assert len(calls) == data["vertex_count"] - 1
    schedule = CallSchedule(data["source"], tuple(sorted(calls)))
    assert schedule.makespan <= horizon
    return schedule


def schedule_to_cds_solution(
    schedule: CallSchedule, trace: ReductionTrace
) -> tuple[DomeSelection, Shifts]:
    """Read the arc selection and shifts back off a deadline schedule.

    Expects a schedule that verifies on the constructed graph with
    makespan at most the deadline; under that premise the center must call
    both cycle neighbors of every dome in time (the tails force it), which
    is asserted rather than re-derived here.
    """
    data = trace.find(STAGE).data
    if schedule.source != data["source"]:
        raise ValueError("schedule source does not match the construction")
    if schedule.makespan > data["horizon"]:
        raise ValueError("schedule misses the broadcast deadline")
    center_round: dict[int, int] = {}
    for call in schedule.calls:
        if call.caller == data["source"]:
            assert call.callee not in center_round
            center_round[call.callee] = call.round

    outer: list[bool] = []
    shifts: list[tuple[int, int]] = []
    for rec in data["domes"]:
        a, b, c, d = rec["endpoints"]
        assert rec["u"] in center_round and rec["v"] in center_round
        x = center_round[rec["u"]]
        y = center_round[rec["v"]]
        if rec["singleton"]:
            assert x <= a and y <= c
            outer.append(True)
        else:
            # The u-side tail forces x <= b, the v-side tail y <= d; the
            # pendants force the stronger bound on at least one side.
            assert x <= b and y <= d
            if x <= a:
                outer.append(True)
            else:
                assert y <= c
                outer.append(False)
        shifts.append((x, y))

    flat = [t for pair in shifts for t in pair]
    assert len(set(flat)) == len(flat)
    sel = DomeSelection(tuple(outer))
    assert cds_check_selection(_domes_from_trace(data), sel) is not None
    return sel, tuple(shifts)
