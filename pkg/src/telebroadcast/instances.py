"""Interval and dome instance types with their text formats.

A twin-interval instance asks for one interval of each pair such that no
time t is covered by more than its cap.  A dome instance asks for one arc
(outer or inner) of each dome; singleton domes have coinciding arcs and
therefore no real choice.  The same dome data serves two readings: the
prefix condition (selected endpoints at or before t never exceed t) and
shift feasibility (endpoints movable to distinct earlier slots).
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

__all__ = [
    "Dome",
    "DomeInstance",
    "DomeSelection",
    "TwinIntervalInstance",
    "format_dome_instance",
    "format_tis_instance",
    "parse_dome_instance",
    "parse_tis_instance",
    "random_dome_instance",
]

Interval = tuple[int, int]


def _check_interval(iv: Interval, m: int, what: str) -> None:
    s, e = iv
    if not (1 <= s <= e <= m):
        raise ValueError(f"{what} [{s}, {e}] must satisfy 1 <= start <= end <= {m}")


@dataclass(frozen=True)
class TwinIntervalInstance:
    """Twin pairs of equal-length disjoint closed intervals plus a
    per-time cap.  ``restriction[t-1]`` caps time t; the cap domain may
    extend past the last interval endpoint."""

    pairs: tuple[tuple[Interval, Interval], ...]
    restriction: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if len(self.restriction) != self.m:
            raise ValueError(
                f"restriction covers {len(self.restriction)} times, expected {self.m}"
            )
        if any(cap < 0 for cap in self.restriction):
            raise ValueError("caps must be nonnegative")
        for idx, (first, second) in enumerate(self.pairs):
            _check_interval(first, self.m, f"pair {idx} first interval")
            _check_interval(second, self.m, f"pair {idx} second interval")
            if first[1] - first[0] != second[1] - second[0]:
                raise ValueError(f"pair {idx}: intervals must have equal length")
            if not (first[1] < second[0] or second[1] < first[0]):
                raise ValueError(f"pair {idx}: intervals must be disjoint")

    @property
    def pair_count(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Dome:
    """Nested arc pair (outer_start, inner_start, inner_end, outer_end).

    The wings have equal width: inner_start - outer_start equals
    outer_end - inner_end.  A zero-width dome has coinciding arcs and must
    carry ``singleton=True``; the flag and the shape must agree.
    """

    outer_start: int
    inner_start: int
    inner_end: int
    outer_end: int
    singleton: bool

    def __post_init__(self) -> None:
        a, b, c, d = self.outer_start, self.inner_start, self.inner_end, self.outer_end
        if not (1 <= a <= b < c <= d):
            raise ValueError(f"dome ({a}, {b}, {c}, {d}) must satisfy 1 <= a <= b < c <= d")
        if b - a != d - c:
            raise ValueError(f"dome ({a}, {b}, {c}, {d}) wings differ: {b - a} vs {d - c}")
        degenerate = a == b and c == d
        if self.singleton != degenerate:
            raise ValueError(
                f"dome ({a}, {b}, {c}, {d}) singleton flag {self.singleton} "
                "contradicts its shape"
            )

    @classmethod
    def regular(cls, a: int, b: int, c: int, d: int) -> "Dome":
        return cls(a, b, c, d, singleton=False)

    @classmethod
    def single(cls, start: int, end: int) -> "Dome":
        return cls(start, start, end, end, singleton=True)

    @property
    def outer(self) -> tuple[int, int]:
        return (self.outer_start, self.outer_end)

    @property
    def inner(self) -> tuple[int, int]:
        return (self.inner_start, self.inner_end)

    @property
    def endpoints(self) -> tuple[int, int, int, int]:
        return (self.outer_start, self.inner_start, self.inner_end, self.outer_end)


@dataclass(frozen=True)
class DomeInstance:
    domes: tuple[Dome, ...]
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        for idx, dome in enumerate(self.domes):
            if dome.outer_end > self.m:
                raise ValueError(f"dome {idx} reaches {dome.outer_end}, beyond m={self.m}")

    @property
    def n_regular(self) -> int:
        return sum(1 for d in self.domes if not d.singleton)


@dataclass(frozen=True)
class DomeSelection:
    """Per-dome arc choice; True picks the outer arc.  Singleton domes have
    only one arc, so their entry must be True."""

    outer: tuple[bool, ...]


def selection_fits(inst: DomeInstance, sel: DomeSelection) -> bool:
    if len(sel.outer) != len(inst.domes):
        return False
    return all(pick or not dome.singleton for pick, dome in zip(sel.outer, inst.domes))


def chosen_arcs(inst: DomeInstance, sel: DomeSelection) -> list[tuple[int, int]]:
    """The selected (start, end) arc per dome, in instance order."""
    if not selection_fits(inst, sel):
        raise ValueError("selection does not fit the instance")
    return [
        dome.outer if pick else dome.inner
        for dome, pick in zip(inst.domes, sel.outer)
    ]


# --- text formats ------------------------------------------------------------


def format_tis_instance(inst: TwinIntervalInstance) -> str:
    lines = ["tis", f"m {inst.m}"]
    for (ls, le), (rs, re) in inst.pairs:
        lines.append(f"pair {ls} {le} {rs} {re}")
    for t, cap in enumerate(inst.restriction, start=1):
        lines.append(f"restriction {t} {cap}")
    return "\n".join(lines) + "\n"


def parse_tis_instance(text: str) -> TwinIntervalInstance:
    m: int | None = None
    pairs: list[tuple[Interval, Interval]] = []
    caps: dict[int, int] = {}
    saw_header = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c "):
            continue
        parts = line.split()
        try:
            if parts[0] == "tis" and len(parts) == 1:
                saw_header = True
            elif parts[0] == "m" and len(parts) == 2:
                m = int(parts[1])
            elif parts[0] == "pair" and len(parts) == 5:
                ls, le, rs, re = map(int, parts[1:])
                pairs.append(((ls, le), (rs, re)))
            elif parts[0] == "restriction" and len(parts) == 3:
                t, cap = int(parts[1]), int(parts[2])
                if t in caps:
                    raise ValueError(f"line {line_no}: duplicate restriction for t={t}")
                caps[t] = cap
            else:
                raise ValueError(f"line {line_no}: unrecognized record {line!r}")
        except ValueError:
            raise
        except Exception as exc:  # int() failures and friends
            raise ValueError(f"line {line_no}: malformed record {line!r}") from exc
    if not saw_header:
        raise ValueError("missing tis header")
    if m is None:
        raise ValueError("missing m line")
    if sorted(caps) != list(range(1, m + 1)):
        raise ValueError(f"restriction must cover every time 1..{m} exactly once")
    restriction = tuple(caps[t] for t in range(1, m + 1))
    return TwinIntervalInstance(tuple(pairs), restriction, m)


def format_dome_instance(inst: DomeInstance) -> str:
    lines = ["dome", f"m {inst.m}"]
    for dome in inst.domes:
        a, b, c, d = dome.endpoints
        kind = "singleton" if dome.singleton else "regular"
        lines.append(f"d {a} {b} {c} {d} {kind}")
    return "\n".join(lines) + "\n"


def parse_dome_instance(text: str) -> DomeInstance:
    m: int | None = None
    domes: list[Dome] = []
    saw_header = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "dome" and len(parts) == 1:
            saw_header = True
            continue
        if parts[0] == "m" and len(parts) == 2:
            try:
                m = int(parts[1])
            except ValueError as exc:
                raise ValueError(f"line {line_no}: malformed m line") from exc
            continue
        if parts[0] == "d" and len(parts) == 6 and parts[5] in ("regular", "singleton"):
            try:
                a, b, c, d = map(int, parts[1:5])
            except ValueError as exc:
                raise ValueError(f"line {line_no}: malformed dome record") from exc
            domes.append(Dome(a, b, c, d, singleton=parts[5] == "singleton"))
            continue
        raise ValueError(f"line {line_no}: unrecognized record {line!r}")
    if not saw_header:
        raise ValueError("missing dome header")
    if m is None:
        raise ValueError("missing m line")
    return DomeInstance(tuple(domes), m)


# --- generators ---------------------------------------------------------------


def random_dome_instance(
    rng: Random, max_domes: int = 12, m: int = 40
) -> DomeInstance:
    """Seeded instance with 1..max_domes domes over 1..m (about 30%
    singletons)."""
    if max_domes < 1 or m < 4:
        raise ValueError("need max_domes >= 1 and m >= 4")
    count = rng.randint(1, max_domes)
    domes = []
    while len(domes) < count:
        if rng.random() < 0.3:
            start = rng.randint(1, m - 1)
            end = rng.randint(start + 1, m)
            domes.append(Dome.single(start, end))
            continue
        b = rng.randint(2, m - 2)
        c = rng.randint(b + 1, m - 1)
        wing = rng.randint(1, min(b - 1, m - c))
        domes.append(Dome.regular(b - wing, b, c, c + wing))
    return DomeInstance(tuple(domes), m)
