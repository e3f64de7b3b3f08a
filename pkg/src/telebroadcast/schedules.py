"""Broadcast schedules and their verification.

A schedule is a list of calls ``(round, caller, callee)``.  The verifier is
total: every way a schedule can be invalid is reported as a value carrying a
reason and the offending call, never as an exception.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graphs import Graph

__all__ = [
    "Call",
    "CallSchedule",
    "MultiCallSchedule",
    "VerifyResult",
    "format_schedule",
    "parse_schedule",
    "relax_to_classic",
    "verify",
]


@dataclass(frozen=True, order=True)
class Call:
    round: int
    caller: int
    callee: int


@dataclass(frozen=True)
class CallSchedule:
    """Classic telephone schedule: one call per caller per round."""

    source: int
    calls: tuple[Call, ...] = field(default_factory=tuple)

    @property
    def makespan(self) -> int:
        return max((c.round for c in self.calls), default=0)


@dataclass(frozen=True)
class MultiCallSchedule:
    """Super-round schedule: up to ``k`` calls per caller per round."""

    source: int
    k: int
    calls: tuple[Call, ...] = field(default_factory=tuple)

    @property
    def makespan(self) -> int:
        return max((c.round for c in self.calls), default=0)


@dataclass(frozen=True)
class VerifyResult:
    accepted: bool
    makespan: int | None = None
    reason: str | None = None
    call: Call | None = None


def _reject(reason: str, call: Call | None = None) -> VerifyResult:
    return VerifyResult(accepted=False, reason=reason, call=call)


def verify(g: Graph, schedule: CallSchedule | MultiCallSchedule) -> VerifyResult:
    """Simulate a schedule against a graph.

    Accepts iff every call is legal (caller already informed, callee a
    previously uninformed neighbor, callee not claimed twice, at most ``k``
    calls per caller per round) and all vertices end up informed.  The
    result's makespan is the largest round used (0 for an empty schedule,
    which only covers the single-vertex graph).
    """
    k = getattr(schedule, "k", 1)
    if not isinstance(k, int) or k < 1:
        return _reject(f"calls-per-round bound must be a positive integer, got {k!r}")
    src = schedule.source
    if not 0 <= src < g.n:
        return _reject(f"source {src} out of range for {g.n} vertices")

    informed = {src}
    seen_callee: set[int] = set()
    by_round: dict[int, list[Call]] = {}
    for call in schedule.calls:
        if call.round < 1:
            return _reject("call rounds start at 1", call)
        by_round.setdefault(call.round, []).append(call)

    makespan = 0
    for rnd in sorted(by_round):
        calls = by_round[rnd]
        caller_load: dict[int, int] = {}
        claimed: set[int] = set()
        for call in calls:
            if not 0 <= call.caller < g.n:
                return _reject(f"caller {call.caller} out of range", call)
            if not 0 <= call.callee < g.n:
                return _reject(f"callee {call.callee} out of range", call)
            if call.caller not in informed:
                return _reject(
                    f"caller {call.caller} is not informed before round {rnd}", call
                )
            if call.callee in informed:
                return _reject(f"callee {call.callee} is already informed", call)
            if call.callee in claimed:
                return _reject(
                    f"callee {call.callee} receives two calls in round {rnd}", call
                )
            if call.callee not in g.adj[call.caller]:
                return _reject(
                    f"no edge between caller {call.caller} and callee {call.callee}",
                    call,
                )
            load = caller_load.get(call.caller, 0) + 1
            if load > k:
                return _reject(
                    f"caller {call.caller} places more than {k} call(s) in round {rnd}",
                    call,
                )
            caller_load[call.caller] = load
            claimed.add(call.callee)
        informed.update(claimed)
        seen_callee.update(claimed)
        makespan = rnd

    if len(informed) != g.n:
        missing = min(set(range(g.n)) - informed)
        return _reject(f"vertex {missing} is never informed")
    return VerifyResult(accepted=True, makespan=makespan)


def relax_to_classic(
    schedule: MultiCallSchedule, g: Graph | None = None
) -> CallSchedule:
    """Expand a super-round schedule into a classic one-call-per-round one.

    A caller's j-th listed callee of super round r (1-based, in listed
    order) is called at classic round ``k*(r-1) + j``.  When a graph is
    given the input is verified first and a rejected schedule raises
    ``ValueError``; without a graph the conversion is purely structural.
    """
    if g is not None:
        result = verify(g, schedule)
        if not result.accepted:
            raise ValueError(f"schedule rejected: {result.reason}")
    k = schedule.k
    per_round_caller: dict[tuple[int, int], int] = {}
    out: list[Call] = []
    for call in schedule.calls:
        key = (call.round, call.caller)
        j = per_round_caller.get(key, 0) + 1
        per_round_caller[key] = j
        out.append(Call(k * (call.round - 1) + j, call.caller, call.callee))
    out.sort()
    return CallSchedule(source=schedule.source, calls=tuple(out))


def format_schedule(schedule: CallSchedule | MultiCallSchedule) -> str:
    k = getattr(schedule, "k", 1)
    lines = ["schedule", f"source {schedule.source}", f"k {k}"]
    for call in sorted(schedule.calls):
        lines.append(f"call {call.round} {call.caller} {call.callee}")
    return "\n".join(lines) + "\n"


def _parse_int_fields(parts: list[str], line_no: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"line {line_no}: expected integers, got {parts}") from exc


def parse_schedule(text: str) -> CallSchedule | MultiCallSchedule:
    """Inverse of :func:`format_schedule`.  Returns a plain
    :class:`CallSchedule` when k is 1."""
    source: int | None = None
    k: int | None = None
    calls: list[Call] = []
    saw_header = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "schedule":
            if saw_header:
                raise ValueError(f"line {line_no}: repeated schedule header")
            saw_header = True
        elif parts[0] == "source":
            if len(parts) != 2:
                raise ValueError(f"line {line_no}: malformed source line")
            (source,) = _parse_int_fields(parts[1:], line_no)
        elif parts[0] == "k":
            if len(parts) != 2:
                raise ValueError(f"line {line_no}: malformed k line")
            (k,) = _parse_int_fields(parts[1:], line_no)
        elif parts[0] == "call":
            if len(parts) != 4:
                raise ValueError(f"line {line_no}: malformed call line")
            rnd, caller, callee = _parse_int_fields(parts[1:], line_no)
            calls.append(Call(rnd, caller, callee))
        else:
            raise ValueError(f"line {line_no}: unknown record {parts[0]!r}")
    if not saw_header:
        raise ValueError("missing schedule header")
    if source is None:
        raise ValueError("missing source line")
    if k is None:
        k = 1
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    calls.sort()
    if k == 1:
        return CallSchedule(source=source, calls=tuple(calls))
    return MultiCallSchedule(source=source, k=k, calls=tuple(calls))


def calls_from_tuples(items: Iterable[tuple[int, int, int]]) -> tuple[Call, ...]:
    """Convenience for building call tuples from bare triples."""
    return tuple(sorted(Call(r, u, v) for r, u, v in items))
