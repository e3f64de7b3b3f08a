from __future__ import annotations

import itertools
import random

import pytest

from telebroadcast.oracles import tis_check_selection, tis_oracle
from telebroadcast.reductions import (
    CnfFormula,
    assignment_to_tis_selection,
    evaluate,
    format_dimacs,
    parse_dimacs,
    random_formula,
    sat_to_tis,
    satisfying_assignment,
    tis_selection_to_assignment,
    trace_from_json,
    trace_to_json,
)


def test_formula_validation():
    CnfFormula(var_count=3, clauses=((1, -2, 3),))
    with pytest.raises(ValueError):  # repeated variable in a clause
        CnfFormula(var_count=3, clauses=((1, -1, 2),))
    with pytest.raises(ValueError):  # literal out of range
        CnfFormula(var_count=2, clauses=((1, 2, 3),))
    with pytest.raises(ValueError):  # zero literal
        CnfFormula(var_count=3, clauses=((0, 1, 2),))
    with pytest.raises(ValueError, match="max 4"):
        CnfFormula(
            var_count=5,
            clauses=(
                (1, 2, 3),
                (1, 2, 4),
                (1, 3, 4),
                (1, 3, 5),
                (1, 4, 5),
            ),
        )


def test_evaluate_and_enumeration():
    f = CnfFormula(var_count=3, clauses=((1, 2, 3), (-1, -2, -3)))
    assert evaluate(f, (True, False, False))
    assert not evaluate(f, (False, False, False))
    with pytest.raises(ValueError):
        evaluate(f, (True,))
    got = satisfying_assignment(f)
    assert got is not None and evaluate(f, got)
    # the enumerator returns the lexicographically first model with
    # variable 1 most significant and False ordered before True
    assert got == (False, False, True)


def test_small_valid_formulas_are_always_satisfiable():
    """With at most 4 clauses per variable, an n-variable formula has at
    most floor(4n/3) clauses, each excluding 2^(n-3) assignments; below six
    variables that cannot cover all 2^n, so every valid small formula has a
    model.  The enumerator must find one every time."""
    rng = random.Random(99)
    for _ in range(300):
        f = random_formula(rng, max_vars=5, max_clauses=4)
        assert satisfying_assignment(f) is not None


def test_enumeration_cap():
    wide = CnfFormula(var_count=25, clauses=((1, 2, 3),))
    with pytest.raises(ValueError, match="refusing"):
        satisfying_assignment(wide)


def test_dimacs_round_trip():
    f = CnfFormula(var_count=4, clauses=((1, -2, 4), (-1, 3, -4)))
    text = format_dimacs(f)
    assert parse_dimacs(text) == f
    assert format_dimacs(parse_dimacs(text)) == text
    assert parse_dimacs("c comment\np cnf 3 1\n1 -2 3 0\n").clauses == ((1, -2, 3),)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "p cnf 3 1\n1 -2 3\n",  # missing terminating zero
        "p cnf 3 2\n1 -2 3 0\n",  # clause count mismatch
        "p cnf 2 1\n1 -2 3 0\n",  # literal out of range
        "1 2 3 0\n",  # no header
    ],
)
def test_dimacs_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_dimacs(text)


def test_random_formula_respects_bounds():
    rng = random.Random(77)
    for _ in range(200):
        f = random_formula(rng)
        assert 1 <= f.var_count <= 5
        assert len(f.clauses) <= 4
        # CnfFormula re-checks the per-variable occurrence cap on build


def test_reduction_shape_for_single_variable():
    f = CnfFormula(var_count=1, clauses=())
    inst, trace = sat_to_tis(f)
    assert inst.pairs == (((1, 8), (9, 16)),)
    assert inst.m == 17
    assert inst.restriction == tuple([1] * 17)
    assert trace.stage == "sat_to_tis"
    assert trace.data["m"] == 17


def test_reduction_shape_with_clauses():
    f = CnfFormula(var_count=3, clauses=((1, -2, 3), (-1, 2, -3)))
    inst, trace = sat_to_tis(f)
    n, c = 3, 2
    assert inst.pair_count == n + 3 * c
    assert inst.m == 16 * n + 2 * c + 2
    # caps: 1 through the variable region and its spacer, 2 afterwards
    boundary = 16 * n + 1
    assert all(cap == 1 for cap in inst.restriction[:boundary])
    assert all(cap == 2 for cap in inst.restriction[boundary:])
    # every clause pair's first interval sits inside the complement block of
    # its literal's variable pair
    for entry in trace.data["clause_pairs"]:
        lit = entry["literal"]
        v = abs(lit)
        block_first = (16 * v - 7) if lit > 0 else (16 * v - 15)
        assert entry["host_start"] == block_first
        first, _second = inst.pairs[entry["pair"]]
        assert block_first <= first[0] <= first[1] <= block_first + 7


def test_assignment_to_selection_and_back():
    rng = random.Random(3)
    converted = 0
    for _ in range(80):
        f = random_formula(rng)
        assignment = satisfying_assignment(f)
        assert assignment is not None  # bounded family is always satisfiable
        inst, trace = sat_to_tis(f)
        picks = assignment_to_tis_selection(f, assignment)
        assert tis_check_selection(inst, picks)
        back = tis_selection_to_assignment(inst, picks, trace)
        assert back == assignment
        converted += 1
    assert converted == 80


def test_assignment_converter_rejects_non_model():
    f = CnfFormula(var_count=3, clauses=((1, 2, 3),))
    with pytest.raises(ValueError):
        assignment_to_tis_selection(f, (False, False, False))


def test_selection_converter_rejects_infeasible_selection():
    f = CnfFormula(var_count=1, clauses=())
    inst, trace = sat_to_tis(f)
    hostile = inst  # caps are all 1; picking nothing is fine, so corrupt picks
    with pytest.raises(ValueError):
        # both intervals of the single pair cannot be "covered twice"; an
        # out-of-shape selection must be refused
        tis_selection_to_assignment(hostile, (True, True), trace)


def test_sat_equivalence_by_full_enumeration():
    """For every assignment of small formulas: models map to feasible
    selections, and the oracle finds a selection iff a model exists."""
    rng = random.Random(11)
    for _ in range(40):
        f = random_formula(rng, max_vars=3, max_clauses=3)
        inst, _trace = sat_to_tis(f)
        models = [
            bits
            for bits in itertools.product([False, True], repeat=f.var_count)
            if evaluate(f, bits)
        ]
        assert (tis_oracle(inst) is not None) == bool(models)


def test_trace_round_trip():
    f = CnfFormula(var_count=3, clauses=((1, -2, 3),))
    _inst, trace = sat_to_tis(f)
    text = trace_to_json(trace)
    assert trace_from_json(text) == trace
    assert trace_to_json(trace_from_json(text)) == text
    with pytest.raises(KeyError):
        trace.find("no_such_stage")
