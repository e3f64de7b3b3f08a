"""Bounded-occurrence 3-CNF formulas.

Clauses have exactly three literals over distinct variables, and no
variable appears in more than four clauses.  Literals are signed 1-based
variable ids, DIMACS style.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from random import Random

__all__ = [
    "CnfFormula",
    "evaluate",
    "format_dimacs",
    "parse_dimacs",
    "random_formula",
    "satisfying_assignment",
]

_ENUMERATION_CAP = 20


@dataclass(frozen=True)
class CnfFormula:
    var_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.var_count < 1:
            raise ValueError(f"var_count must be positive, got {self.var_count}")
        uses: Counter[int] = Counter()
        for idx, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise ValueError(f"clause {idx} has {len(clause)} literals, expected 3")
            variables = set()
            for lit in clause:
                if lit == 0 or abs(lit) > self.var_count:
                    raise ValueError(f"clause {idx}: literal {lit} out of range")
                variables.add(abs(lit))
            if len(variables) != 3:
                raise ValueError(f"clause {idx} repeats a variable: {clause}")
            uses.update(variables)
        for var, count in uses.items():
            if count > 4:
                raise ValueError(f"variable {var} appears in {count} clauses (max 4)")


def evaluate(formula: CnfFormula, assignment: tuple[bool, ...]) -> bool:
    if len(assignment) != formula.var_count:
        raise ValueError(
            f"assignment has {len(assignment)} values for {formula.var_count} variables"
        )
    return all(
        any(assignment[abs(lit) - 1] == (lit > 0) for lit in clause)
        for clause in formula.clauses
    )


def satisfying_assignment(formula: CnfFormula) -> tuple[bool, ...] | None:
    """First satisfying assignment in lexicographic order (variable 1 most
    significant, False before True), or None."""
    n = formula.var_count
    if n > _ENUMERATION_CAP:
        raise ValueError(f"refusing exhaustive search over {n} variables")
    for k in range(1 << n):
        assignment = tuple(((k >> (n - i)) & 1) == 1 for i in range(1, n + 1))
        if evaluate(formula, assignment):
            return assignment
    return None


def format_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.var_count} {len(formula.clauses)}"]
    lines.extend(" ".join(map(str, clause)) + " 0" for clause in formula.clauses)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    header: tuple[int, int] | None = None
    tokens: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"malformed problem line {line!r}")
            if header is not None:
                raise ValueError("duplicate problem line")
            header = (int(parts[2]), int(parts[3]))
            continue
        try:
            tokens.extend(int(tok) for tok in line.split())
        except ValueError as exc:
            raise ValueError(f"malformed clause line {line!r}") from exc
    if header is None:
        raise ValueError("missing problem line")
    clauses: list[tuple[int, int, int]] = []
    current: list[int] = []
    for tok in tokens:
        if tok == 0:
            clauses.append(tuple(current))  # type: ignore[arg-type]
            current = []
        else:
            current.append(tok)
    if current:
        raise ValueError("last clause is not 0-terminated")
    var_count, clause_count = header
    if len(clauses) != clause_count:
        raise ValueError(f"header promises {clause_count} clauses, found {len(clauses)}")
    return CnfFormula(var_count, tuple(clauses))


def random_formula(rng: Random, max_vars: int = 5, max_clauses: int = 4) -> CnfFormula:
    """Seeded formula within the occurrence bounds.  Fewer than three
    variables leaves no room for a distinct-variable clause, so small draws
    come out clause-free."""
    if max_vars < 1:
        raise ValueError("need max_vars >= 1")
    var_count = rng.randint(1, max_vars)
    clauses: list[tuple[int, int, int]] = []
    if var_count >= 3:
        budget = {v: 4 for v in range(1, var_count + 1)}
        for _ in range(rng.randint(0, max_clauses)):
            open_vars = [v for v, left in budget.items() if left > 0]
            if len(open_vars) < 3:
                break
            chosen = rng.sample(open_vars, 3)
            for v in chosen:
                budget[v] -= 1
            clauses.append(tuple(v if rng.random() < 0.5 else -v for v in sorted(chosen)))
    return CnfFormula(var_count, tuple(clauses))
