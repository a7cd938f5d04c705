from hypothesis import strategies as st

from mwpflow.choice_algebra import Delta, Monomial, Polynomial
from mwpflow.matrix import FlowMatrix
from mwpflow.semiring import Coefficient

MAX_INDEX = 4

coefficients = st.sampled_from(list(Coefficient))
nonzero = st.sampled_from([c for c in Coefficient if c is not Coefficient.ZERO])


@st.composite
def deltas(draw, max_index=MAX_INDEX):
    idx = draw(st.lists(st.integers(0, max_index - 1), unique=True, max_size=max_index))
    return tuple(Delta(draw(st.integers(0, 2)), i) for i in idx)


@st.composite
def monomials(draw, max_index=MAX_INDEX):
    return Monomial(draw(nonzero), draw(deltas(max_index)))


def raw_monomial_lists(max_index=MAX_INDEX, max_size=6):
    return st.lists(monomials(max_index), max_size=max_size)


def polynomials(max_index=MAX_INDEX, max_size=6):
    return raw_monomial_lists(max_index, max_size).map(Polynomial)


@st.composite
def matrices(draw, dim=None, max_index=3, max_size=2):
    n = dim if dim is not None else draw(st.integers(0, 3))
    return FlowMatrix(
        [draw(polynomials(max_index, max_size)) for _ in range(n)] for _ in range(n)
    )
