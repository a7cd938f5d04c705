"""The flow calculus over the frontend AST.

Every binary operation with a variable operand is a derivation point with
three alternatives.  For ``x = l op r`` at point ``k`` the operands flow into
``x`` with these coefficients (identical for ``+``, ``-`` and ``*``):

    alternative 0:  l -> w,  r -> w
    alternative 1:  l -> m,  r -> p
    alternative 2:  l -> p,  r -> m
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .choice_algebra import UNIT_POLY, ZERO_POLY, Delta, Monomial, Polynomial, poly_add
from .delta_graph import ChoiceSet, DeltaGraph
from .frontend import (
    Assign,
    BinOp,
    Const,
    FrontendError,
    FunctionDef,
    If,
    Location,
    Program,
    Skip,
    Var,
    While,
    collect_variables,
)
from .matrix import FlowMatrix
from .relation import Relation, compose, relation_sum, while_close
from .semiring import M, P, W

BINOP_TABLE = {
    0: (W, W),
    1: (M, P),
    2: (P, M),
}


@dataclass
class DerivationContext:
    next_index: int = 0
    index_sites: dict[int, Location] = field(default_factory=dict)

    def fresh(self, location: Location) -> int:
        k = self.next_index
        self.index_sites[k] = location
        self.next_index += 1
        return k


@dataclass
class AnalysisResult:
    name: str
    relation: Relation
    num_indices: int
    passing_choices: ChoiceSet | None
    infinite_vars: list[str]
    index_sites: dict[int, Location] = field(default_factory=dict)

    @property
    def evaluated(self) -> bool:
        return self.passing_choices is not None

    @property
    def polynomial(self) -> bool:
        """True when at least one derivation avoids every ``i`` flow."""
        return bool(self.passing_choices)


def _operand_poly(side: int, k: int) -> Polynomial:
    return Polynomial(
        Monomial(BINOP_TABLE[alt][side], (Delta(alt, k),)) for alt in BINOP_TABLE
    )


def assign_vector(
    target: str, expr, ctx: DerivationContext, variables: Sequence[str], location=None
) -> Relation:
    """Relation of one assignment: identity except for the target's column."""
    n = len(variables)
    pos = {v: i for i, v in enumerate(variables)}
    column = [ZERO_POLY] * n
    if isinstance(expr, Var):
        column[pos[expr.name]] = UNIT_POLY
    elif isinstance(expr, BinOp):
        operands = [(side, a) for side, a in enumerate((expr.left, expr.right))
                    if isinstance(a, Var)]
        if operands:
            k = ctx.fresh(location)
            for side, a in operands:
                row = pos[a.name]
                column[row] = poly_add(column[row], _operand_poly(side, k))
    elif not isinstance(expr, Const):
        raise TypeError(f"unexpected expression {expr!r}")
    t = pos[target]
    rows = []
    for i in range(n):
        row = [UNIT_POLY if i == j else ZERO_POLY for j in range(n)]
        row[t] = column[i]
        rows.append(row)
    return Relation(variables, FlowMatrix(rows))


def compute_relation(stmts, ctx: DerivationContext, variables: Sequence[str]) -> Relation:
    rel = Relation.identity(variables)
    for s in stmts:
        if isinstance(s, Assign):
            step = assign_vector(s.target, s.expr, ctx, variables, s.location)
        elif isinstance(s, If):
            step = relation_sum(
                compute_relation(s.then, ctx, variables),
                compute_relation(s.orelse, ctx, variables),
            )
        elif isinstance(s, While):
            step = while_close(compute_relation(s.body, ctx, variables))
        elif isinstance(s, Skip):
            continue
        else:
            raise TypeError(f"unexpected statement {s!r}")
        rel = compose(rel, step)
    return rel


def evaluate(rel: Relation, num_indices: int) -> tuple[ChoiceSet, list[str]]:
    """Passing choices and the variables unbounded under every choice."""
    graph = DeltaGraph()
    unbounded = []
    for j, name in enumerate(rel.variables):
        column = DeltaGraph()
        for poly in rel.matrix.column(j):
            for guard in poly.infinite_guards():
                column.insert(guard)
                graph.insert(guard)
        if column and not column.fusion().passing_assignments(num_indices):
            unbounded.append(name)
    passing = graph.fusion().passing_assignments(num_indices)
    return passing, unbounded


def analyze_function(f: FunctionDef, run_eval: bool = True) -> AnalysisResult:
    variables = collect_variables(f)
    ctx = DerivationContext()
    rel = compute_relation(f.body, ctx, variables)
    if run_eval:
        passing, unbounded = evaluate(rel, ctx.next_index)
    else:
        passing, unbounded = None, []
    return AnalysisResult(f.name, rel, ctx.next_index, passing, unbounded, ctx.index_sites)


def analyze(program: Program, run_eval: bool = True) -> dict[str, AnalysisResult | FrontendError]:
    """Analyze every function; a function that fails scoping maps to its error."""
    out: dict[str, AnalysisResult | FrontendError] = {}
    for f in program.functions:
        try:
            out[f.name] = analyze_function(f, run_eval)
        except FrontendError as err:
            out[f.name] = err
    return out
