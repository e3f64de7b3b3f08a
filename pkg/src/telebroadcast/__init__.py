"""Telephone broadcast scheduling on cactus graphs.

Exact branch-and-bound and linear-time tree solvers, a constant-factor
cactus approximation, schedule verification (classic and multi-call),
the 3-SAT hardness reduction pipeline with witness converters, and
pathwidth-based lower bounds.
"""

from .approx import cactus_broadcaster
from .bounds import (
    DeletionCheck,
    WidthBound,
    check_deletion_inequality,
    lower_bound_f,
    lower_bound_from_n,
    width_bound,
)
from .cactus import CactusRejection, CycleStructure, decompose_cactus
from .exact import (
    BudgetExhausted,
    SearchBudget,
    can_broadcast_within,
    exact_broadcast_time,
    tree_broadcast_time,
)
from .graphs import Graph, format_graph, generate, parse_graph
from .instances import (
    Dome,
    DomeInstance,
    DomeSelection,
    TwinIntervalInstance,
    format_dome_instance,
    format_tis_instance,
    parse_dome_instance,
    parse_tis_instance,
)
from .oracles import (
    cds_check_selection,
    cds_oracle,
    dspr_check_selection,
    dspr_oracle,
    tis_check_selection,
    tis_oracle,
)
from .pathdecomp import (
    PathDecomposition,
    snowflake_decomposition,
    standardize_decomposition,
    validate_decomposition,
)
from .schedules import (
    Call,
    CallSchedule,
    MultiCallSchedule,
    format_schedule,
    parse_schedule,
    relax_to_classic,
    verify,
)
from .snowflake import SnowflakeCertificate, SnowflakeRejection, recognize_snowflake

__all__ = [
    "BudgetExhausted",
    "CactusRejection",
    "Call",
    "CallSchedule",
    "CycleStructure",
    "DeletionCheck",
    "Dome",
    "DomeInstance",
    "DomeSelection",
    "Graph",
    "MultiCallSchedule",
    "PathDecomposition",
    "SearchBudget",
    "SnowflakeCertificate",
    "SnowflakeRejection",
    "TwinIntervalInstance",
    "WidthBound",
    "cactus_broadcaster",
    "can_broadcast_within",
    "cds_check_selection",
    "cds_oracle",
    "check_deletion_inequality",
    "decompose_cactus",
    "dspr_check_selection",
    "dspr_oracle",
    "exact_broadcast_time",
    "format_dome_instance",
    "format_graph",
    "format_schedule",
    "format_tis_instance",
    "generate",
    "lower_bound_f",
    "lower_bound_from_n",
    "parse_dome_instance",
    "parse_graph",
    "parse_schedule",
    "parse_tis_instance",
    "recognize_snowflake",
    "relax_to_classic",
    "snowflake_decomposition",
    "standardize_decomposition",
    "tis_check_selection",
    "tis_oracle",
    "tree_broadcast_time",
    "validate_decomposition",
    "verify",
    "width_bound",
]
