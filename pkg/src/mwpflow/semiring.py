"""The mwp semiring extended with a local failure element.

Values are ordered ``0 < m < w < p < i``; ``i`` (infinity) marks a flow
with no polynomial bound.
"""

from __future__ import annotations

from enum import IntEnum


class Coefficient(IntEnum):
    ZERO = 0
    M = 1
    W = 2
    P = 3
    INF = 4

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def from_symbol(cls, symbol: str) -> Coefficient:
        try:
            return _BY_SYMBOL[symbol]
        except KeyError:
            raise ValueError(f"unknown coefficient symbol {symbol!r}") from None

    def __str__(self) -> str:
        return self.symbol

    def __repr__(self) -> str:
        return f"Coefficient.{self.name}"


_SYMBOLS = {
    Coefficient.ZERO: "0",
    Coefficient.M: "m",
    Coefficient.W: "w",
    Coefficient.P: "p",
    Coefficient.INF: "i",
}
_BY_SYMBOL = {s: c for c, s in _SYMBOLS.items()}

ZERO, M, W, P, INF = Coefficient


def join(a: Coefficient, b: Coefficient) -> Coefficient:
    """Semiring addition: the larger of the two coefficients."""
    return a if a >= b else b


def times(a: Coefficient, b: Coefficient) -> Coefficient:
    """Semiring product.

    ``0`` annihilates everything, ``i`` included; otherwise the larger
    coefficient wins, which makes ``m`` the unit.
    """
    if a is ZERO or b is ZERO:
        return ZERO
    return a if a >= b else b
