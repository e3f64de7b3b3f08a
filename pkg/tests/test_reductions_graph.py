from __future__ import annotations

import random

import pytest

from telebroadcast.cactus import CycleStructure, decompose_cactus
from telebroadcast.instances import (
    Dome,
    DomeInstance,
    random_dome_instance,
)
from telebroadcast.oracles import cds_oracle
from telebroadcast.pathdecomp import snowflake_decomposition, validate_decomposition
from telebroadcast.reductions import (
    cds_solution_to_schedule,
    cds_to_graph,
    schedule_to_cds_solution,
)
from telebroadcast.schedules import Call, CallSchedule, verify
from telebroadcast.snowflake import SnowflakeCertificate, recognize_snowflake


def test_singleton_dome_graph_shape():
    inst = DomeInstance(domes=(Dome.single(1, 2),), m=2)
    g, trace = cds_to_graph(inst)
    # horizon 4: head arm 3 vertices + rear arm 2, two tails, center, source
    assert trace.data["horizon"] == 4
    assert g.n == 11
    entry = trace.data["domes"][0]
    assert len(entry["main"]) == (4 - 1) + (4 - 2)
    assert len(entry["tail_u"]) == 4 - 1
    assert len(entry["tail_v"]) == 4 - 2
    assert entry["pendants"] == []
    assert entry["z"] is None


def test_regular_dome_graph_shape():
    inst = DomeInstance(domes=(Dome.regular(1, 2, 3, 4),), m=4)
    g, trace = cds_to_graph(inst)
    assert trace.data["horizon"] == 8
    assert g.n == 23
    entry = trace.data["domes"][0]
    head, rear = 8 - 2, 8 - 4
    assert len(entry["main"]) == head + rear + 1
    assert entry["main"][head] == entry["z"]
    assert len(entry["pendants"]) == 2 - 1
    # z's pendants hang only off z
    for p in entry["pendants"]:
        assert g.adj[p] == frozenset({entry["z"]})


def test_empty_instance_rejected():
    with pytest.raises(ValueError, match="at least one dome"):
        cds_to_graph(DomeInstance(domes=(), m=1))


def test_graph_is_always_a_snowflake_with_width_two_decomposition():
    rng = random.Random(13)
    for _ in range(12):
        inst = random_dome_instance(rng, max_domes=8, m=24)
        g, _trace = cds_to_graph(inst)
        assert isinstance(decompose_cactus(g), CycleStructure)
        cert = recognize_snowflake(g)
        assert isinstance(cert, SnowflakeCertificate)
        assert validate_decomposition(g, snowflake_decomposition(cert)) == 2


def test_feasible_instances_give_horizon_schedules():
    rng = random.Random(29)
    produced = 0
    for _ in range(40):
        inst = random_dome_instance(rng, max_domes=8, m=24)
        answer = cds_oracle(inst)
        if answer is None:
            continue
        sel, shifts = answer
        g, trace = cds_to_graph(inst)
        schedule = cds_solution_to_schedule(inst, sel, shifts, trace)
        checked = verify(g, schedule)
        assert checked.accepted
        assert checked.makespan <= trace.data["horizon"]
        produced += 1
    assert produced >= 10


def test_schedule_converts_back_to_the_same_solution():
    rng = random.Random(37)
    for _ in range(30):
        inst = random_dome_instance(rng, max_domes=6, m=20)
        answer = cds_oracle(inst)
        if answer is None:
            continue
        sel, shifts = answer
        _g, trace = cds_to_graph(inst)
        schedule = cds_solution_to_schedule(inst, sel, shifts, trace)
        back_sel, back_shifts = schedule_to_cds_solution(schedule, trace)
        assert back_sel == sel
        assert back_shifts == shifts


def test_solution_converter_rejects_mismatched_instance():
    inst = DomeInstance(domes=(Dome.single(1, 2),), m=2)
    other = DomeInstance(domes=(Dome.single(1, 3),), m=3)
    _g, trace = cds_to_graph(inst)
    answer = cds_oracle(inst)
    assert answer is not None
    sel, shifts = answer
    with pytest.raises(ValueError, match="trace"):
        cds_solution_to_schedule(other, sel, shifts, trace)


def test_solution_converter_rejects_bad_shifts():
    inst = DomeInstance(domes=(Dome.single(2, 3),), m=3)
    _g, trace = cds_to_graph(inst)
    answer = cds_oracle(inst)
    assert answer is not None
    sel, _shifts = answer
    with pytest.raises(ValueError):
        cds_solution_to_schedule(inst, sel, ((0, 1),), trace)  # x below 1
    with pytest.raises(ValueError):
        cds_solution_to_schedule(inst, sel, ((3, 3),), trace)  # x past start
    with pytest.raises(ValueError):
        cds_solution_to_schedule(inst, sel, ((2, 2),), trace)  # x equals y


def test_backward_rejects_overlong_schedules():
    inst = DomeInstance(domes=(Dome.single(1, 2),), m=2)
    g, trace = cds_to_graph(inst)
    late = CallSchedule(
        source=0, calls=(Call(trace.data["horizon"] + 1, 0, min(g.adj[0])),)
    )
    with pytest.raises(ValueError, match="deadline"):
        schedule_to_cds_solution(late, trace)
    wrong_source = CallSchedule(source=1)
    with pytest.raises(ValueError, match="source"):
        schedule_to_cds_solution(wrong_source, trace)
