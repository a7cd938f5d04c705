from hypothesis import given, settings
from hypothesis import strategies as st

import pytest

from mwpflow.choice_algebra import UNIT_POLY, ZERO_POLY, Delta, Monomial, Polynomial
from mwpflow.matrix import (
    FlowMatrix,
    MatrixDimensionError,
    closure,
    identity,
    matrix_product,
    matrix_sum,
    zeros,
)
from mwpflow.semiring import M, P, W

from oracles import assignments, eval_matrix, s_times
from strategies import matrices

SIGMAS = assignments(3)


def m(scalar, *deltas):
    return Polynomial([Monomial(scalar, tuple(Delta(a, i) for a, i in deltas))])


def oracle_product(a, b):
    n = len(a)
    return [
        [max((s_times(a[i][k], b[k][j]) for k in range(n)), default=0) for j in range(n)]
        for i in range(n)
    ]


def test_identity():
    assert identity(0).dim == 0
    i2 = identity(2)
    assert i2.rows == ((UNIT_POLY, ZERO_POLY), (ZERO_POLY, UNIT_POLY))


@given(matrices())
def test_unit_and_zero_laws(a):
    n = a.dim
    assert matrix_product(identity(n), a) == a
    assert matrix_product(a, identity(n)) == a
    assert matrix_sum(zeros(n), a) == a
    assert matrix_sum(a, a) == a
    assert matrix_product(a, zeros(n)) == zeros(n)


def test_dimension_mismatch():
    with pytest.raises(MatrixDimensionError):
        matrix_sum(identity(1), identity(2))
    with pytest.raises(MatrixDimensionError):
        matrix_product(identity(2), identity(3))
    with pytest.raises(MatrixDimensionError):
        FlowMatrix([[ZERO_POLY, ZERO_POLY]])


def test_product_2x2_against_hand_expansion():
    a = FlowMatrix([[m(M), m(W, (0, 0))], [m(P, (1, 0)), ZERO_POLY]])
    b = FlowMatrix([[ZERO_POLY, m(M, (2, 1))], [m(M), m(P, (0, 1))]])
    got = matrix_product(a, b)
    # row 0: [w.d(0,0) ; m.d(2,1) + p.d(0,0).d(0,1)], row 1: [0 ; p.d(1,0).d(2,1)]
    expected = FlowMatrix(
        [
            [m(W, (0, 0)), Polynomial([Monomial(M, (Delta(2, 1),)),
                                        Monomial(P, (Delta(0, 0), Delta(0, 1)))])],
            [ZERO_POLY, m(P, (1, 0), (2, 1))],
        ]
    )
    assert got == expected
    for s in SIGMAS:
        assert eval_matrix(got, s) == oracle_product(eval_matrix(a, s), eval_matrix(b, s))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(matrices(n), matrices(n))))
def test_sum_and_product_evaluate_entrywise(pair):
    a, b = pair
    s_sum, s_prod = matrix_sum(a, b), matrix_product(a, b)
    for s in SIGMAS:
        ea, eb = eval_matrix(a, s), eval_matrix(b, s)
        assert eval_matrix(s_sum, s) == [
            [max(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(ea, eb)
        ]
        assert eval_matrix(s_prod, s) == oracle_product(ea, eb)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(matrices(n), matrices(n), matrices(n))))
@settings(max_examples=50)
def test_product_associative_and_distributive(triple):
    a, b, c = triple
    for s in SIGMAS:
        assert eval_matrix(matrix_product(matrix_product(a, b), c), s) == eval_matrix(
            matrix_product(a, matrix_product(b, c)), s
        )
        assert eval_matrix(matrix_product(a, matrix_sum(b, c)), s) == eval_matrix(
            matrix_sum(matrix_product(a, b), matrix_product(a, c)), s
        )


def test_closure_examples():
    assert closure(zeros(3)) == identity(3)
    assert closure(identity(2)) == identity(2)
    edge = FlowMatrix([[ZERO_POLY, UNIT_POLY], [ZERO_POLY, ZERO_POLY]])
    assert closure(edge) == matrix_sum(identity(2), edge)


def test_closure_of_a_cycle_reaches_every_node():
    z, u = ZERO_POLY, UNIT_POLY
    cycle = FlowMatrix([[z, u, z], [z, z, u], [u, z, z]])
    c = closure(cycle)
    assert all(not p.is_zero for row in c.rows for p in row)


def oracle_star(a):
    n = len(a)
    acc = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    power = acc
    for _ in range(n * n * 4 + 2):
        power = oracle_product(power, a)
        acc = [[max(x, y) for x, y in zip(r1, r2)] for r1, r2 in zip(acc, power)]
    return acc


@given(matrices())
@settings(max_examples=80)
def test_closure_is_join_of_powers_and_fixpoint(a):
    c = closure(a)
    assert matrix_sum(identity(a.dim), matrix_product(c, a)) == c
    for s in SIGMAS:
        assert eval_matrix(c, s) == oracle_star(eval_matrix(a, s))
