"""Command-line surface.

Exit codes: 0 success/accept, 1 reject or infeasible, 2 usage error
(including malformed files), 3 search budget exhaustion.  All instance
file formats live with their owning modules; this module adds argument
framing plus the small witness text formats (assignments, selections,
shift witnesses).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from random import Random

from .approx import cactus_broadcaster
from .bounds import width_bound
from .exact import (
    BudgetExhausted,
    SearchBudget,
    default_node_limit,
    exact_broadcast_time,
    tree_broadcast_time,
)
from .graphs import GENERATOR_KINDS, Graph, format_graph, generate, parse_graph
from .instances import (
    DomeSelection,
    format_dome_instance,
    format_tis_instance,
    parse_dome_instance,
    parse_tis_instance,
    random_dome_instance,
)
from .oracles import cds_check_selection, dspr_check_selection
from .reductions import (
    assignment_to_tis_selection,
    cds_solution_to_schedule,
    cds_to_graph,
    dspr_selection_to_tis_selection,
    dspr_to_cds,
    format_dimacs,
    parse_dimacs,
    random_formula,
    sat_to_tis,
    schedule_to_cds_solution,
    tis_selection_to_assignment,
    tis_selection_to_dspr_selection,
    tis_to_dspr,
    trace_from_json,
    trace_to_json,
)
from .reductions.dome_stage import dome_instance_from_trace
from .schedules import format_schedule, parse_schedule, verify

__all__ = ["main"]

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

STAGES = ("sat_to_tis", "tis_to_dspr", "dspr_to_cds", "cds_to_graph")


class _CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _CliError(EXIT_USAGE, f"cannot read {path}: {exc}") from exc


def _write_text(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise _CliError(EXIT_USAGE, f"cannot write {path}: {exc}") from exc


def _parse_with(parser, path: str):
    text = _read_text(path)
    try:
        return parser(text)
    except ValueError as exc:
        raise _CliError(EXIT_USAGE, f"{path}: {exc}") from exc


# --- witness text formats -----------------------------------------------------


def _format_assignment(values: tuple[bool, ...]) -> str:
    lines = ["assignment"]
    lines.extend(f"x {i} {int(v)}" for i, v in enumerate(values, start=1))
    return "\n".join(lines) + "\n"


def _parse_assignment(text: str) -> tuple[bool, ...]:
    values: dict[int, bool] = {}
    saw_header = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line == "assignment":
            saw_header = True
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] != "x" or parts[2] not in ("0", "1"):
            raise ValueError(f"unrecognized assignment record {line!r}")
        values[int(parts[1])] = parts[2] == "1"
    if not saw_header:
        raise ValueError("missing assignment header")
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValueError("assignment must cover variables 1..n exactly once")
    return tuple(values[i] for i in range(1, len(values) + 1))


def _format_tis_selection(picks: tuple[bool, ...]) -> str:
    lines = ["tis-selection"]
    lines.extend(
        f"pick {i} {'first' if p else 'second'}" for i, p in enumerate(picks)
    )
    return "\n".join(lines) + "\n"


def _parse_tis_selection(text: str) -> tuple[bool, ...]:
    picks: dict[int, bool] = {}
    saw_header = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line == "tis-selection":
            saw_header = True
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] != "pick" or parts[2] not in ("first", "second"):
            raise ValueError(f"unrecognized selection record {line!r}")
        picks[int(parts[1])] = parts[2] == "first"
    if not saw_header:
        raise ValueError("missing tis-selection header")
    if sorted(picks) != list(range(len(picks))):
        raise ValueError("selection must cover pairs 0..k-1 exactly once")
    return tuple(picks[i] for i in range(len(picks)))


def _format_dome_selection(sel: DomeSelection) -> str:
    lines = ["dome-selection"]
    lines.extend(
        f"arc {i} {'outer' if p else 'inner'}" for i, p in enumerate(sel.outer)
    )
    return "\n".join(lines) + "\n"


def _parse_dome_selection(text: str) -> DomeSelection:
    picks: dict[int, bool] = {}
    saw_header = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line == "dome-selection":
            saw_header = True
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] != "arc" or parts[2] not in ("outer", "inner"):
            raise ValueError(f"unrecognized selection record {line!r}")
        picks[int(parts[1])] = parts[2] == "outer"
    if not saw_header:
        raise ValueError("missing dome-selection header")
    if sorted(picks) != list(range(len(picks))):
        raise ValueError("selection must cover domes 0..k-1 exactly once")
    return DomeSelection(tuple(picks[i] for i in range(len(picks))))


def _format_cds_witness(
    sel: DomeSelection, shifts: tuple[tuple[int, int], ...]
) -> str:
    lines = ["cds-witness"]
    for i, (pick, (x, y)) in enumerate(zip(sel.outer, shifts)):
        lines.append(f"dome {i} {'outer' if pick else 'inner'} {x} {y}")
    return "\n".join(lines) + "\n"


def _parse_cds_witness(text: str) -> tuple[DomeSelection, tuple[tuple[int, int], ...]]:
    rows: dict[int, tuple[bool, int, int]] = {}
    saw_header = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line == "cds-witness":
            saw_header = True
            continue
        parts = line.split()
        if len(parts) != 5 or parts[0] != "dome" or parts[2] not in ("outer", "inner"):
            raise ValueError(f"unrecognized witness record {line!r}")
        rows[int(parts[1])] = (parts[2] == "outer", int(parts[3]), int(parts[4]))
    if not saw_header:
        raise ValueError("missing cds-witness header")
    if sorted(rows) != list(range(len(rows))):
        raise ValueError("witness must cover domes 0..k-1 exactly once")
    sel = DomeSelection(tuple(rows[i][0] for i in range(len(rows))))
    shifts = tuple((rows[i][1], rows[i][2]) for i in range(len(rows)))
    return sel, shifts


# --- subcommands ----------------------------------------------------------------


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _parse_with(parse_graph, args.graph)
    try:
        if args.algorithm == "tree":
            rounds, schedule = tree_broadcast_time(g, args.source)
        elif args.algorithm == "exact":
            budget = None
            if args.budget is not None:
                budget = SearchBudget(max(g.n - 1, 1), args.budget)
            rounds, schedule = exact_broadcast_time(g, args.source, budget)
        else:
            schedule = cactus_broadcaster(g, args.source)
            rounds = schedule.makespan
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECT
    if args.out:
        _write_text(args.out, format_schedule(schedule))
    print(f"makespan {rounds}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _parse_with(parse_graph, args.graph)
    schedule = _parse_with(parse_schedule, args.schedule)
    result = verify(g, schedule)
    if result.accepted:
        print(f"accepted makespan {result.makespan}")
        return EXIT_OK
    detail = f" (call round={result.call.round} {result.call.caller}->{result.call.callee})" if result.call else ""
    print(f"rejected: {result.reason}{detail}")
    return EXIT_REJECT


def _cmd_reduce(args: argparse.Namespace) -> int:
    formula = _parse_with(parse_dimacs, args.cnf)
    out_dir = Path(args.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise _CliError(EXIT_USAGE, f"cannot create {out_dir}: {exc}") from exc
    stem = Path(args.cnf).stem
    written: list[Path] = []

    def emit(suffix: str, text: str) -> None:
        path = out_dir / f"{stem}.{suffix}"
        _write_text(str(path), text)
        written.append(path)

    try:
        tis, trace = sat_to_tis(formula)
        emit("tis", format_tis_instance(tis))
        if args.to in ("dspr", "cds", "graph"):
            domes, trace = tis_to_dspr(tis, parent=trace)
            emit("dspr", format_dome_instance(domes))
        if args.to in ("cds", "graph"):
            domes, trace = dspr_to_cds(domes, parent=trace)
            emit("cds", format_dome_instance(domes))
        if args.to == "graph":
            graph, trace = cds_to_graph(domes, parent=trace)
            emit("graph", format_graph(graph))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECT
    emit("trace", trace_to_json(trace))
    for path in written:
        print(path)
    return EXIT_OK


def _cmd_witness(args: argparse.Namespace) -> int:
    trace = _parse_with(trace_from_json, args.trace)
    witness_text = _read_text(args.witness)

    def need_instance(kind: str) -> str:
        if args.instance is None:
            raise _CliError(
                EXIT_USAGE, f"--stage {args.stage} --direction {args.direction} needs --instance ({kind})"
            )
        return args.instance

    try:
        if args.stage == "sat_to_tis":
            if args.direction == "forward":
                formula = _parse_with(parse_dimacs, need_instance("cnf file"))
                assignment = _parse_assignment(witness_text)
                out = _format_tis_selection(assignment_to_tis_selection(formula, assignment))
            else:
                inst = _parse_with(parse_tis_instance, need_instance("tis file"))
                picks = _parse_tis_selection(witness_text)
                out = _format_assignment(tis_selection_to_assignment(inst, picks, trace))
        elif args.stage == "tis_to_dspr":
            if args.direction == "forward":
                picks = _parse_tis_selection(witness_text)
                out = _format_dome_selection(tis_selection_to_dspr_selection(picks, trace))
            else:
                sel = _parse_dome_selection(witness_text)
                out = _format_tis_selection(dspr_selection_to_tis_selection(sel, trace))
        elif args.stage == "dspr_to_cds":
            inst = _parse_with(parse_dome_instance, need_instance("dome file"))
            if args.direction == "forward":
                sel = _parse_dome_selection(witness_text)
                shifts = cds_check_selection(inst, sel)
                if shifts is None:
                    print("error: no feasible shift assignment for this selection", file=sys.stderr)
                    return EXIT_REJECT
                out = _format_cds_witness(sel, shifts)
            else:
                sel, _shifts = _parse_cds_witness(witness_text)
                if not dspr_check_selection(inst, sel):
                    print("error: selection fails the prefix condition", file=sys.stderr)
                    return EXIT_REJECT
                out = _format_dome_selection(sel)
        else:  # cds_to_graph
            if args.direction == "forward":
                inst = _parse_with(parse_dome_instance, need_instance("dome file"))
                sel, shifts = _parse_cds_witness(witness_text)
                schedule = cds_solution_to_schedule(inst, sel, shifts, trace)
                out = format_schedule(schedule)
            else:
                schedule = _parse_with(parse_schedule, args.witness)
                sel, shifts = schedule_to_cds_solution(schedule, trace)
                out = _format_cds_witness(sel, shifts)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECT
    if args.out:
        _write_text(args.out, out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "random_dome":
        inst = random_dome_instance(Random(args.seed), args.max_domes, args.m)
        text = format_dome_instance(inst)
    elif args.kind == "formula":
        rng = Random(args.seed)
        formula = (
            random_formula(rng, args.n) if args.n is not None else random_formula(rng)
        )
        text = format_dimacs(formula)
    else:
        params = {}
        if args.n is not None:
            params["n"] = args.n
        if args.caterpillars is not None:
            params["caterpillars"] = args.caterpillars
        if args.max_spine is not None:
            params["max_spine"] = args.max_spine
        if args.max_pendants is not None:
            params["max_pendants"] = args.max_pendants
        try:
            g = generate(args.kind, params, args.seed)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        text = format_graph(g)
    _write_text(args.out, text)
    print(args.out)
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise _CliError(EXIT_USAGE, f"{corpus} is not a directory")
    files = sorted(corpus.glob("*.graph"))
    if not files:
        raise _CliError(EXIT_USAGE, f"no *.graph files in {corpus}")
    node_limit = args.budget if args.budget is not None else default_node_limit()
    exhausted = False
    rows = []
    for path in files:
        g = _parse_with(parse_graph, str(path))
        started = time.perf_counter()
        try:
            schedule = cactus_broadcaster(g, 0)
        except ValueError as exc:
            print(f"error: {path.name}: {exc}", file=sys.stderr)
            return EXIT_REJECT
        wall = time.perf_counter() - started
        makespan = schedule.makespan
        try:
            optimum, _ = exact_broadcast_time(
                g, 0, SearchBudget(max(g.n - 1, 1), node_limit)
            )
            ratio = f"{makespan / optimum:.6f}" if optimum else "1.000000"
            opt_text = str(optimum)
        except BudgetExhausted:
            exhausted = True
            opt_text, ratio = "-", "-"
        rows.append(
            (path.stem, "cactus_broadcaster", str(makespan), opt_text, ratio, f"{wall:.6f}")
        )
    print("instance\talgorithm\tmakespan\toptimum\tratio\twall_time")
    for row in rows:
        print("\t".join(row))
    return EXIT_BUDGET if exhausted else EXIT_OK


def _cmd_bounds(args: argparse.Namespace) -> int:
    g = _parse_with(parse_graph, args.graph)
    try:
        record = width_bound(args.width, g.n, args.ell)
        budget = None
        if args.budget is not None:
            budget = SearchBudget(max(g.n - 1, 1), args.budget)
        exact, _ = exact_broadcast_time(g, args.source, budget)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECT
    bound = record.f_value if args.ell is not None else record.n_based
    ratio = f"{exact / bound:.6f}"
    print("graph\tn\twidth\tbound\texact\tratio")
    print(
        f"{Path(args.graph).stem}\t{g.n}\t{args.width}\t{bound:.6g}\t{exact}\t{ratio}"
    )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="telebroadcast",
        description="Telephone broadcast scheduling: solvers, verification, reductions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a broadcast schedule")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exact", dest="algorithm", action="store_const", const="exact")
    mode.add_argument("--tree", dest="algorithm", action="store_const", const="tree")
    mode.add_argument("--cactus", dest="algorithm", action="store_const", const="cactus")
    p.add_argument("graph")
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--out", help="write the schedule to this file")
    p.add_argument("--budget", type=int, help="node limit for the exact search")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a schedule against a graph")
    p.add_argument("graph")
    p.add_argument("schedule")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reduce", help="run the 3-SAT reduction pipeline")
    p.add_argument("--from", dest="source_kind", choices=["sat"], required=True)
    p.add_argument("--to", choices=["tis", "dspr", "cds", "graph"], required=True)
    p.add_argument("cnf")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("witness", help="convert witnesses along the reduction")
    p.add_argument("--direction", choices=["forward", "backward"], required=True)
    p.add_argument("--stage", choices=list(STAGES), required=True)
    p.add_argument("--trace", required=True, help="trace file from reduce")
    p.add_argument("witness", help="witness file to convert")
    p.add_argument("--instance", help="instance file, where the stage needs one")
    p.add_argument("--out", help="write the converted witness here (default stdout)")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("gen", help="generate a graph, dome-instance, or formula file")
    p.add_argument("kind", choices=list(GENERATOR_KINDS) + ["random_dome", "formula"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--n", type=int, help="size parameter (vertices, or variable cap)")
    p.add_argument("--caterpillars", type=int, help="branch count for snowflake_random")
    p.add_argument("--max-spine", type=int, help="snowflake_random: longest spine")
    p.add_argument("--max-pendants", type=int, help="snowflake_random: pendant cap per branch")
    p.add_argument("--max-domes", type=int, default=12, help="random_dome: dome count cap")
    p.add_argument("--m", type=int, default=40, help="random_dome: time horizon")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="ratio table over a corpus directory")
    p.add_argument("--corpus", required=True, help="directory of *.graph files")
    p.add_argument("--budget", type=int, help="node limit per exact solve")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("bounds", help="pathwidth lower-bound report")
    p.add_argument("graph")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--source", type=int, default=0)
    p.add_argument("--ell", type=float, help="known decomposition length")
    p.add_argument("--budget", type=int, help="node limit for the exact solve")
    p.set_defaults(func=_cmd_bounds)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
