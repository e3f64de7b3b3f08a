"""Reduction pipeline: 3-CNF -> twin intervals -> domes -> shifted domes ->
broadcast graph, with witness converters in both directions at every stage."""

from .formula import CnfFormula, evaluate, format_dimacs, parse_dimacs, random_formula, satisfying_assignment
from .trace import ReductionTrace, trace_from_json, trace_to_json
from .sat_stage import assignment_to_tis_selection, sat_to_tis, tis_selection_to_assignment
from .dome_stage import (
    dspr_selection_to_tis_selection,
    dspr_to_cds,
    tis_selection_to_dspr_selection,
    tis_to_dspr,
)
from .graph_stage import cds_solution_to_schedule, cds_to_graph, schedule_to_cds_solution

__all__ = [
    "CnfFormula",
    "ReductionTrace",
    "assignment_to_tis_selection",
    "cds_solution_to_schedule",
    "cds_to_graph",
    "dspr_selection_to_tis_selection",
    "dspr_to_cds",
    "evaluate",
    "format_dimacs",
    "parse_dimacs",
    "random_formula",
    "sat_to_tis",
    "satisfying_assignment",
    "schedule_to_cds_solution",
    "tis_selection_to_assignment",
    "tis_selection_to_dspr_selection",
    "tis_to_dspr",
    "trace_from_json",
    "trace_to_json",
]
