from __future__ import annotations

import pytest

from telebroadcast.graphs import Graph, generate
from telebroadcast.schedules import (
    Call,
    CallSchedule,
    MultiCallSchedule,
    calls_from_tuples,
    format_schedule,
    parse_schedule,
    relax_to_classic,
    verify,
)

PATH3 = Graph.from_edges(3, [(0, 1), (1, 2)])


def test_accepts_straight_line_broadcast():
    schedule = CallSchedule(0, calls_from_tuples([(1, 0, 1), (2, 1, 2)]))
    result = verify(PATH3, schedule)
    assert result.accepted
    assert result.makespan == 2


def test_empty_schedule_only_covers_single_vertex():
    assert verify(Graph(1, (frozenset(),)), CallSchedule(0)).accepted
    result = verify(PATH3, CallSchedule(0))
    assert not result.accepted
    assert "never informed" in result.reason


@pytest.mark.parametrize(
    "calls,needle",
    [
        ([(0, 0, 1)], "rounds start at 1"),
        ([(1, 2, 1)], "not informed"),
        ([(1, 0, 1), (2, 1, 0)], "already informed"),
        ([(1, 0, 2)], "no edge"),
        ([(1, 0, 5)], "out of range"),
    ],
)
def test_rejections_name_the_problem(calls, needle):
    result = verify(PATH3, CallSchedule(0, calls_from_tuples(calls)))
    assert not result.accepted
    assert needle in result.reason
    assert result.call is not None or "never informed" in result.reason


def test_rejects_two_calls_by_one_caller():
    schedule = CallSchedule(1, calls_from_tuples([(1, 1, 0), (1, 1, 2)]))
    result = verify(PATH3, schedule)
    assert not result.accepted
    assert "more than 1" in result.reason


def test_rejects_doubly_claimed_callee():
    square = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    schedule = CallSchedule(
        0, calls_from_tuples([(1, 0, 1), (1, 0, 3), (2, 1, 2), (2, 3, 2)])
    )
    result = verify(square, schedule)
    assert not result.accepted
    assert "two calls" in result.reason or "more than" in result.reason


def test_multi_schedule_respects_k():
    star = generate("star", 4)
    two_at_once = MultiCallSchedule(
        0, 2, calls_from_tuples([(1, 0, 1), (1, 0, 2), (2, 0, 3)])
    )
    assert verify(star, two_at_once).accepted
    assert not verify(star, MultiCallSchedule(0, 1, two_at_once.calls)).accepted


def test_relax_spreads_super_rounds():
    star = generate("star", 4)
    multi = MultiCallSchedule(
        0, 2, calls_from_tuples([(1, 0, 1), (1, 0, 2), (2, 0, 3)])
    )
    classic = relax_to_classic(multi, star)
    assert isinstance(classic, CallSchedule)
    assert verify(star, classic).accepted
    # super round 1 expands to rounds 1..2, super round 2 starts at round 3
    assert [c.round for c in classic.calls] == [1, 2, 3]
    assert classic.makespan <= multi.k * multi.makespan


def test_relax_rejects_bad_input_when_graph_given():
    bogus = MultiCallSchedule(0, 2, calls_from_tuples([(1, 2, 0)]))
    with pytest.raises(ValueError, match="rejected"):
        relax_to_classic(bogus, PATH3)
    # structural conversion without a graph still works
    assert relax_to_classic(bogus).calls == (Call(1, 2, 0),)


def test_format_parse_round_trip_classic_and_multi():
    classic = CallSchedule(0, calls_from_tuples([(1, 0, 1), (2, 1, 2)]))
    multi = MultiCallSchedule(2, 3, calls_from_tuples([(1, 2, 0), (1, 2, 1)]))
    for schedule in (classic, multi):
        text = format_schedule(schedule)
        assert parse_schedule(text) == schedule
        assert format_schedule(parse_schedule(text)) == text


@pytest.mark.parametrize(
    "text",
    [
        "source 0\n",
        "schedule\nk 1\n",
        "schedule\nsource 0\nk 0\n",
        "schedule\nsource 0\ncall 1 0\n",
        "schedule\nsource 0\nbogus\n",
        "schedule\nschedule\nsource 0\n",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_schedule(text)
