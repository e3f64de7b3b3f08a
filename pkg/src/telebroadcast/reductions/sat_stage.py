"""Formula to twin-interval stage.

Variable i owns two adjacent length-8 interval blocks: picking the first
asserts the variable true, the second false.  Every clause adds a shared
length-2 collector block capped at 2, plus one pair per literal whose
first interval is a private slot inside the block of the literal's
complement.  A pair can dodge the collector only through that slot, which
is free exactly when the literal holds, so at most two of a clause's three
pairs may lean on the collector and some literal must be true.

Times are 1-based: the construction sits on 1..16n for variable blocks,
leaves 16n+1 as a capped spacer, and puts collector j at
[16n+2j+1, 16n+2j+2] with per-time cap 2 past the spacer.
"""

from __future__ import annotations

from ..instances import TwinIntervalInstance
from ..oracles import tis_check_selection
from .formula import CnfFormula, evaluate
from .trace import ReductionTrace

__all__ = [
    "assignment_to_tis_selection",
    "sat_to_tis",
    "tis_selection_to_assignment",
]

STAGE = "sat_to_tis"


def _complement_block_start(lit: int) -> int:
    """First time of the block owned by the literal's complement."""
    v = abs(lit)
    return 16 * v - 7 if lit > 0 else 16 * v - 15


def sat_to_tis(formula: CnfFormula) -> tuple[TwinIntervalInstance, ReductionTrace]:
    n = formula.var_count
    pairs: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for i in range(1, n + 1):
        pairs.append(((16 * i - 15, 16 * i - 8), (16 * i - 7, 16 * i)))

    clause_pairs: list[dict[str, int]] = []
    occurrences: dict[int, int] = {}
    for j, clause in enumerate(formula.clauses, start=1):
        collector = (16 * n + 2 * j + 1, 16 * n + 2 * j + 2)
        for lit in clause:
            host = _complement_block_start(lit)
            slot = occurrences.get(lit, 0)
            occurrences[lit] = slot + 1
            pairs.append(((host + 2 * slot, host + 2 * slot + 1), collector))
            clause_pairs.append(
                {
                    "pair": len(pairs) - 1,
                    "clause": j,
                    "literal": lit,
                    "slot": slot,
                    "host_start": host,
                }
            )

    m = 16 * n + 2 * len(formula.clauses) + 2 if formula.clauses else 16 * n + 1
    restriction = tuple(1 if t <= 16 * n + 1 else 2 for t in range(1, m + 1))
    inst = TwinIntervalInstance(tuple(pairs), restriction, m)
    trace = ReductionTrace(
        STAGE,
        {
            "var_count": n,
            "clauses": [list(clause) for clause in formula.clauses],
            "variable_pairs": list(range(n)),
            "clause_pairs": clause_pairs,
            "m": m,
        },
    )
    return inst, trace


def assignment_to_tis_selection(
    formula: CnfFormula, assignment: tuple[bool, ...]
) -> tuple[bool, ...]:
    """Selection for the constructed instance: variable pairs follow the
    assignment, clause pairs take their private slot when their literal
    holds and the collector otherwise."""
    if not evaluate(formula, assignment):
        raise ValueError("assignment does not satisfy the formula")
    picks = list(assignment)
    for clause in formula.clauses:
        for lit in clause:
            picks.append(assignment[abs(lit) - 1] == (lit > 0))
    return tuple(picks)


def tis_selection_to_assignment(
    inst: TwinIntervalInstance,
    selection: tuple[bool, ...],
    trace: ReductionTrace,
) -> tuple[bool, ...]:
    """Read the assignment off the variable pairs of a feasible selection.

    The caps force it to satisfy the recorded formula, which is asserted.
    """
    data = trace.find(STAGE).data
    if not tis_check_selection(inst, selection):
        raise ValueError("selection is not feasible for the instance")
    assignment = tuple(selection[idx] for idx in data["variable_pairs"])
    formula = CnfFormula(
        data["var_count"], tuple(tuple(cl) for cl in data["clauses"])
    )
    assert evaluate(formula, assignment)
    return assignment
