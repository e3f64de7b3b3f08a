from __future__ import annotations

import random

import pytest

from telebroadcast.instances import Dome, DomeSelection, TwinIntervalInstance
from telebroadcast.oracles import dspr_check_selection, dspr_oracle, tis_oracle
from telebroadcast.reductions import (
    dspr_selection_to_tis_selection,
    dspr_to_cds,
    random_formula,
    sat_to_tis,
    tis_selection_to_dspr_selection,
    tis_to_dspr,
)
from telebroadcast.reductions.dome_stage import dome_instance_from_trace


def _tis(pairs, caps, m):
    return TwinIntervalInstance(
        pairs=tuple((tuple(a), tuple(b)) for a, b in pairs),
        restriction=tuple(caps),
        m=m,
    )


def test_single_pair_layout():
    inst = _tis([((1, 2), (3, 4))], [1, 1, 1, 1], 4)
    domes, trace = tis_to_dspr(inst)
    # one regular dome from the pair (scaled by 6, widened by 3), the rest
    # padding singletons
    pair_dome = domes.domes[trace.data["pair_domes"][0]]
    assert (
        pair_dome.outer_start,
        pair_dome.inner_start,
        pair_dome.inner_end,
        pair_dome.outer_end,
    ) == (6, 15, 18, 27)
    assert not pair_dome.singleton
    assert all(d.singleton for i, d in enumerate(domes.domes) if i != 0)
    assert dome_instance_from_trace(trace) == domes


def test_padding_counts_match_trace():
    inst = _tis([((1, 2), (3, 4))], [1, 0, 1, 2], 4)
    domes, trace = tis_to_dspr(inst)
    total_padding = sum(need for _t, need in trace.data["padding"])
    assert total_padding == len(domes.domes) - 1
    # all padding lefts precede rights_start, rights fill a contiguous run
    rights = sorted(d.outer_end for d in domes.domes if d.singleton)
    start = trace.data["rights_start"]
    assert rights == list(range(start, start + len(rights)))


def test_pair_order_and_nonempty_requirements():
    with pytest.raises(ValueError, match="at least one pair"):
        tis_to_dspr(_tis([], [1, 1], 2))
    # second interval before the first: the stage requires ordered pairs
    bad = _tis([((3, 4), (1, 2))], [1, 1, 1, 1], 4)
    with pytest.raises(ValueError, match="precede"):
        tis_to_dspr(bad)


def test_overgenerous_caps_rejected():
    # cap exceeds what padding can absorb at t=1: nothing can be pinned yet
    inst = _tis([((1, 2), (3, 4))], [9, 1, 1, 1], 4)
    with pytest.raises(ValueError, match="pad"):
        tis_to_dspr(inst)


def test_feasibility_is_preserved_and_reflected():
    rng = random.Random(5)
    agreements = 0
    for _ in range(120):
        f = random_formula(rng)
        tis, trace = sat_to_tis(f)
        domes, trace = tis_to_dspr(tis, parent=trace)
        tis_answer = tis_oracle(tis)
        dome_answer = dspr_oracle(domes)
        assert (tis_answer is None) == (dome_answer is None)
        if tis_answer is not None:
            forward = tis_selection_to_dspr_selection(tis_answer, trace)
            assert dspr_check_selection(domes, forward)
            back = dspr_selection_to_tis_selection(forward, trace)
            assert back == tis_answer
            agreements += 1
    assert agreements  # the satisfiable route was really taken


def test_forward_witness_rejects_infeasible_selection():
    inst = _tis([((1, 1), (2, 2))], [0, 0], 2)
    domes, trace = tis_to_dspr(inst)
    assert tis_oracle(inst) is None
    with pytest.raises(ValueError):
        tis_selection_to_dspr_selection((True,), trace)
    with pytest.raises(ValueError):
        tis_selection_to_dspr_selection((False,), trace)


def test_backward_witness_rejects_infeasible_selection():
    inst = _tis([((1, 2), (3, 4))], [1, 1, 1, 1], 4)
    domes, trace = tis_to_dspr(inst)
    sel = dspr_oracle(domes)
    assert sel is not None
    # flip the pair dome to inner while keeping singletons outer, then
    # corrupt: claim a selection that the prefix condition rejects
    outer = list(sel.outer)
    rigged = DomeSelection(tuple(outer))
    ok = dspr_selection_to_tis_selection(rigged, trace)
    assert ok in ((True,), (False,))
    nonsense = DomeSelection(tuple([True] * (len(outer) - 1)))
    with pytest.raises(ValueError):
        dspr_selection_to_tis_selection(nonsense, trace)


def test_cds_stage_is_an_annotation():
    inst = _tis([((1, 2), (3, 4))], [1, 1, 1, 1], 4)
    domes, trace = tis_to_dspr(inst)
    same, cds_trace = dspr_to_cds(domes, parent=trace)
    assert same == domes
    assert cds_trace.stage == "dspr_to_cds"
    assert cds_trace.parent is trace
    assert cds_trace.data["dome_count"] == len(domes.domes)


def test_scaled_endpoints_leave_gaps_for_shifts():
    """Every constructed endpoint is a multiple of 6P or offset by 3P, so
    consecutive endpoints are at least 3P apart; the shift pool can never
    collide between neighbouring endpoint groups."""
    rng = random.Random(9)
    for _ in range(30):
        f = random_formula(rng, max_vars=3, max_clauses=2)
        tis, trace = sat_to_tis(f)
        domes, _ = tis_to_dspr(tis, parent=trace)
        scale = 3 * tis.pair_count
        for dome in domes.domes:
            if dome.singleton:
                continue
            for t in dome.endpoints:
                assert t % scale == 0
