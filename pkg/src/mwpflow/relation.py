"""Relations: a variable list bound to a flow matrix."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .choice_algebra import Monomial, Polynomial, poly_add
from .matrix import FlowMatrix, closure, identity, matrix_product, matrix_sum
from .semiring import INF, P, W


@dataclass(frozen=True)
class Relation:
    variables: tuple[str, ...]
    matrix: FlowMatrix

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variables in {self.variables}")
        if self.matrix.dim != len(self.variables):
            raise ValueError("matrix dimension does not match the variable list")

    @classmethod
    def identity(cls, variables: Iterable[str]) -> Relation:
        variables = tuple(variables)
        return cls(variables, identity(len(variables)))

    def entry(self, source: str, target: str) -> Polynomial:
        return self.matrix[self.variables.index(source), self.variables.index(target)]

    def column(self, target: str) -> list[Polynomial]:
        return self.matrix.column(self.variables.index(target))

    def extend(self, variables: Sequence[str]) -> Relation:
        """Re-express over ``variables`` (a superset), identity on new ones."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        pos = {v: k for k, v in enumerate(self.variables)}
        missing = set(self.variables) - set(variables)
        if missing:
            raise ValueError(f"cannot drop variables {sorted(missing)}")
        mapping = [pos.get(v) for v in variables]
        return Relation(variables, self.matrix.resize(mapping, len(variables)))

    def permute(self, variables: Sequence[str]) -> Relation:
        if set(variables) != set(self.variables):
            raise ValueError("permutation must keep the same variables")
        return self.extend(variables)

    def __str__(self) -> str:
        width = max((len(v) for v in self.variables), default=0)
        lines = [" " * width + " | " + " | ".join(self.variables)]
        for i, v in enumerate(self.variables):
            cells = " | ".join(str(p) for p in self.matrix.rows[i])
            lines.append(f"{v:>{width}} | {cells}")
        return "\n".join(lines)


def homogenise(a: Relation, b: Relation) -> tuple[Relation, Relation]:
    if a.variables == b.variables:
        return a, b
    seen = set(a.variables)
    union = list(a.variables) + [v for v in b.variables if v not in seen]
    return a.extend(union), b.extend(union)


def compose(a: Relation, b: Relation) -> Relation:
    """Sequential composition: ``a`` runs first, then ``b``."""
    a, b = homogenise(a, b)
    return Relation(a.variables, matrix_product(a.matrix, b.matrix))


def relation_sum(a: Relation, b: Relation) -> Relation:
    a, b = homogenise(a, b)
    return Relation(a.variables, matrix_sum(a.matrix, b.matrix))


def _loop_triggers(c: FlowMatrix, i: int) -> list[Monomial]:
    found = []
    for j, poly in enumerate(c.column(i)):
        for mono in poly:
            if mono.scalar >= P or (j == i and mono.scalar >= W):
                found.append(mono)
    return found


def while_close(body: Relation) -> Relation:
    """Close a loop body and mark unbounded growth with guarded ``i``.

    After closure, a self-flow of ``w`` or more on the diagonal, or a flow of
    ``p`` or more anywhere into a variable, means that variable can grow beyond any
    polynomial under the guarding choices.  Every entry of its column then
    receives ``i`` under the same guards; the analysis carries on.
    """
    c = closure(body.matrix)
    rows = [list(r) for r in c.rows]
    for i in range(c.dim):
        triggers = _loop_triggers(c, i)
        if not triggers:
            continue
        bad = Polynomial(Monomial(INF, m.deltas) for m in triggers)
        for j in range(c.dim):
            rows[j][i] = poly_add(rows[j][i], bad)
    return Relation(body.variables, FlowMatrix(rows))


class RelationList:
    """A nonempty collection of candidate relations."""

    def __init__(self, relations: Iterable[Relation]):
        self.relations = list(relations)
        if not self.relations:
            raise ValueError("a relation list cannot be empty")

    def __len__(self) -> int:
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RelationList):
            return NotImplemented
        return self.relations == other.relations

    def compose_each(self, other: Relation) -> RelationList:
        return RelationList(compose(r, other) for r in self.relations)

    def sum_all(self) -> Relation:
        return reduce(relation_sum, self.relations)
