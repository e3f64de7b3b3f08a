"""Twin-interval to dome stages.

Every pair becomes one branching dome on a 6P-stretched time axis (P =
pair count): the outer arc stands for the first interval, the inner arc
for the second.  Half-step offsets keep all dome endpoints distinct.
Padding singletons then soak up the leftover capacity at each stretched
time so that the per-time caps of the source instance turn into the
uniform prefix bound of the dome problem.

The final dome stage is an identity on the data: the same instance is
read as a shift problem (distinct target slots at or before each selected
endpoint) instead of a prefix-counting problem.
"""

from __future__ import annotations

from ..instances import Dome, DomeInstance, DomeSelection, TwinIntervalInstance
from ..oracles import dspr_check_selection, tis_check_selection
from .trace import ReductionTrace

__all__ = [
    "dome_instance_from_trace",
    "dspr_selection_to_tis_selection",
    "dspr_to_cds",
    "tis_selection_to_dspr_selection",
    "tis_to_dspr",
]

STAGE = "tis_to_dspr"
CDS_STAGE = "dspr_to_cds"


def tis_to_dspr(
    inst: TwinIntervalInstance, parent: ReductionTrace | None = None
) -> tuple[DomeInstance, ReductionTrace]:
    pair_count = inst.pair_count
    if pair_count == 0:
        raise ValueError("need at least one pair")
    scale = 3 * pair_count
    step = 2 * scale

    regular: list[Dome] = []
    for idx, ((ls, le), (rs, re)) in enumerate(inst.pairs):
        if le >= rs:
            raise ValueError(f"pair {idx}: first interval must precede its twin")
        regular.append(
            Dome.regular(step * ls, step * le + scale, step * rs, step * re + scale)
        )

    # Capacity audit at each stretched source time: a dome with all four
    # endpoints at or before t pins two slots there, one with three or two
    # endpoints pins one (its selection cannot avoid that), and the source
    # cap keeps its own slots.  Whatever remains must be eaten by forced
    # singleton left-endpoints for the prefix bound to bite exactly.
    padding: list[tuple[int, int]] = []
    consumed = 0
    for tp in range(1, inst.m + 1):
        t = step * tp
        pinned = 0
        for dome in regular:
            below = sum(1 for e in dome.endpoints if e <= t)
            if below == 4:
                pinned += 2
            elif below >= 2:
                pinned += 1
        need = t - pinned - consumed - inst.restriction[tp - 1]
        if need < 0:
            raise ValueError(f"cap at time {tp} is too generous to pad (deficit {-need})")
        padding.append((t, need))
        consumed += need

    rights_start = max(max(d.outer_end for d in regular), step * inst.m) + 1
    singles = [
        Dome.single(t, rights_start + idx)
        for idx, t in enumerate(t for t, need in padding for _ in range(need))
    ]
    m_out = rights_start + len(singles) - 1 if singles else rights_start - 1
    out = DomeInstance(tuple(regular) + tuple(singles), m_out)

    trace = ReductionTrace(
        STAGE,
        {
            "scale": scale,
            "step": step,
            "pair_count": pair_count,
            "tis_m": inst.m,
            "tis_pairs": [[ls, le, rs, re] for (ls, le), (rs, re) in inst.pairs],
            "tis_restriction": list(inst.restriction),
            "pair_domes": list(range(pair_count)),
            "padding": [[t, need] for t, need in padding],
            "rights_start": rights_start,
            "result_domes": [[*d.endpoints, d.singleton] for d in out.domes],
            "result_m": m_out,
        },
        parent=parent,
    )
    return out, trace


def _tis_from_trace(data: dict) -> TwinIntervalInstance:
    pairs = tuple(((ls, le), (rs, re)) for ls, le, rs, re in data["tis_pairs"])
    return TwinIntervalInstance(pairs, tuple(data["tis_restriction"]), data["tis_m"])


def _domes_from_trace(data: dict) -> DomeInstance:
    domes = tuple(
        Dome(a, b, c, d, singleton=bool(s)) for a, b, c, d, s in data["result_domes"]
    )
    return DomeInstance(domes, data["result_m"])


def dome_instance_from_trace(trace: ReductionTrace) -> DomeInstance:
    """The dome instance a trace's interval-to-dome stage constructed."""
    return _domes_from_trace(trace.find(STAGE).data)


def tis_selection_to_dspr_selection(
    selection: tuple[bool, ...], trace: ReductionTrace
) -> DomeSelection:
    """First interval maps to outer arc; padding singletons ride along
    forced outer."""
    data = trace.find(STAGE).data
    source = _tis_from_trace(data)
    if not tis_check_selection(source, selection):
        raise ValueError("selection is not feasible for the source instance")
    outer = [True] * len(data["result_domes"])
    for pair_idx, dome_idx in enumerate(data["pair_domes"]):
        outer[dome_idx] = selection[pair_idx]
    out = DomeSelection(tuple(outer))
    assert dspr_check_selection(_domes_from_trace(data), out)
    return out


def dspr_selection_to_tis_selection(
    sel: DomeSelection, trace: ReductionTrace
) -> tuple[bool, ...]:
    data = trace.find(STAGE).data
    target = _domes_from_trace(data)
    if not dspr_check_selection(target, sel):
        raise ValueError("selection is not feasible for the dome instance")
    picks = tuple(sel.outer[dome_idx] for dome_idx in data["pair_domes"])
    assert tis_check_selection(_tis_from_trace(data), picks)
    return picks


def dspr_to_cds(
    inst: DomeInstance, parent: ReductionTrace | None = None
) -> tuple[DomeInstance, ReductionTrace]:
    """Identity on the data; selections and their witnesses carry over
    unchanged (the greedy slot assignment realizes any prefix-feasible
    selection as distinct shifts)."""
    trace = ReductionTrace(
        CDS_STAGE,
        {"m": inst.m, "dome_count": len(inst.domes)},
        parent=parent,
    )
    return inst, trace
