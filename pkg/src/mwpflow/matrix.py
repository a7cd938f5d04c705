"""Dense square matrices of polynomials.

Row ``i`` is the source (input) slot and column ``j`` the target (output)
slot, so ``entry(i, j)`` is the flow from variable ``i`` into variable ``j``.
Storage is dense on purpose: analysis matrices are routinely fully populated.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .choice_algebra import UNIT_POLY, ZERO_POLY, Polynomial, poly_add, poly_times


class MatrixDimensionError(ValueError):
    """Raised when operands have different dimensions (an internal error)."""


class ClosureDidNotConverge(RuntimeError):
    pass


class FlowMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Polynomial]] = ()):
        self.rows: tuple[tuple[Polynomial, ...], ...] = tuple(tuple(r) for r in rows)
        n = len(self.rows)
        for r in self.rows:
            if len(r) != n:
                raise MatrixDimensionError("flow matrices must be square")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> list[Polynomial]:
        return [row[j] for row in self.rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FlowMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: FlowMatrix) -> FlowMatrix:
        return matrix_sum(self, other)

    def __mul__(self, other: FlowMatrix) -> FlowMatrix:
        return matrix_product(self, other)

    def __repr__(self) -> str:
        return f"FlowMatrix(dim={self.dim})"

    def __str__(self) -> str:
        return "\n".join(" | ".join(str(p) for p in row) for row in self.rows)

    def indices(self) -> set[int]:
        out: set[int] = set()
        for row in self.rows:
            for p in row:
                out |= p.indices()
        return out

    def resize(self, mapping: Sequence[int | None], dim: int) -> FlowMatrix:
        """Re-slot entries into a ``dim``-sized matrix.

        ``mapping[k]`` is the old slot placed at new slot ``k``, or ``None``
        for a fresh slot, which gets an identity row and column.
        """
        rows = []
        for i in range(dim):
            oi = mapping[i]
            row = []
            for j in range(dim):
                oj = mapping[j]
                if oi is None or oj is None:
                    row.append(UNIT_POLY if i == j else ZERO_POLY)
                else:
                    row.append(self.rows[oi][oj])
            rows.append(row)
        return FlowMatrix(rows)


def identity(dim: int) -> FlowMatrix:
    return FlowMatrix(
        [UNIT_POLY if i == j else ZERO_POLY for j in range(dim)] for i in range(dim)
    )


def zeros(dim: int) -> FlowMatrix:
    return FlowMatrix([ZERO_POLY] * dim for _ in range(dim))


def _check_dims(a: FlowMatrix, b: FlowMatrix) -> None:
    if a.dim != b.dim:
        raise MatrixDimensionError(
            f"dimension mismatch: {a.dim} vs {b.dim} (homogenise first)"
        )


def matrix_sum(a: FlowMatrix, b: FlowMatrix) -> FlowMatrix:
    _check_dims(a, b)
    if a is b:
        return a
    return FlowMatrix(
        [poly_add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)
    )


def matrix_product(a: FlowMatrix, b: FlowMatrix) -> FlowMatrix:
    _check_dims(a, b)
    n = a.dim
    cols = [b.column(j) for j in range(n)]
    rows = []
    for ra in a.rows:
        row = []
        for col in cols:
            acc = ZERO_POLY
            for x, y in zip(ra, col):
                if x.is_zero or y.is_zero:
                    continue
                acc = poly_add(acc, poly_times(x, y))
            row.append(acc)
        rows.append(row)
    return FlowMatrix(rows)


def closure_cap(a: FlowMatrix) -> int:
    """Iteration bound for :func:`closure`.

    Any walk is equivalent to one that uses the same set of (entry, monomial)
    choices and has length at most ``choices * dim + dim``.
    """
    choices = sum(len(p) for row in a.rows for p in row)
    return choices * a.dim + a.dim + 1


def closure(a: FlowMatrix) -> FlowMatrix:
    """Join of all powers of ``a``, the identity included."""
    current = matrix_sum(identity(a.dim), a)
    cap = closure_cap(a)
    for _ in range(cap):
        nxt = matrix_sum(current, matrix_product(current, a))
        if nxt == current:
            return current
        current = nxt
    raise ClosureDidNotConverge(f"closure exceeded {cap} iterations")
