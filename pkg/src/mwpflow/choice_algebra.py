"""Monomials and polynomials over derivation choices.

A monomial is a coefficient guarded by a set of deltas ``(alternative,
index)``: it contributes its coefficient only under assignments picking
``alternative`` at every guarded derivation point.  A polynomial is the join
of its monomials, kept in a canonical form that is sorted and free of
monomials dominated by another one.

Canonical order is graded: fewer deltas first, then the delta lists
lexicographically by ``(index, alternative)``, then the scalar.  With this
order a monomial can only be contained by monomials sorting before it,
which is what makes insertion-time elimination a single forward pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple

from .semiring import INF, ZERO, Coefficient, join, times

ALTERNATIVES = (0, 1, 2)


class Delta(NamedTuple):
    alternative: int
    index: int

    def sort_key(self) -> tuple[int, int]:
        return (self.index, self.alternative)


Assignment = Mapping[int, int]


def _delta_key(deltas: tuple[Delta, ...]) -> tuple[tuple[int, int], ...]:
    return tuple((d.index, d.alternative) for d in deltas)


@dataclass(frozen=True)
class Monomial:
    scalar: Coefficient
    deltas: tuple[Delta, ...] = ()
    _bindings: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        scalar = Coefficient(self.scalar)
        object.__setattr__(self, "scalar", scalar)
        if scalar is ZERO:
            object.__setattr__(self, "deltas", ())
            object.__setattr__(self, "_bindings", {})
            return
        deltas = tuple(sorted((Delta(*d) for d in self.deltas), key=Delta.sort_key))
        bindings: dict[int, int] = {}
        for d in deltas:
            if d.alternative not in ALTERNATIVES:
                raise ValueError(f"alternative {d.alternative} out of range")
            if d.index in bindings:
                raise ValueError(f"index {d.index} guarded twice in one monomial")
            bindings[d.index] = d.alternative
        object.__setattr__(self, "deltas", deltas)
        object.__setattr__(self, "_bindings", bindings)

    @property
    def is_zero(self) -> bool:
        return self.scalar is ZERO

    @property
    def bindings(self) -> Mapping[int, int]:
        """The guards as an ``index -> alternative`` map."""
        return self._bindings

    def sort_key(self):
        return (len(self.deltas), _delta_key(self.deltas), int(self.scalar))

    def __lt__(self, other: Monomial) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        guards = "".join(f".d({d.alternative},{d.index})" for d in self.deltas)
        return f"{self.scalar}{guards}"


ZERO_MONOMIAL = Monomial(ZERO)


def monomial_product(a: Monomial, b: Monomial) -> Monomial:
    scalar = times(a.scalar, b.scalar)
    if scalar is ZERO:
        return ZERO_MONOMIAL
    merged = dict(a.bindings)
    for index, alt in b.bindings.items():
        if merged.setdefault(index, alt) != alt:
            return ZERO_MONOMIAL
    return Monomial(scalar, tuple(Delta(alt, idx) for idx, alt in merged.items()))


def monomial_contains(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` dominates ``b`` under every assignment."""
    if a.scalar < b.scalar or len(a.deltas) > len(b.deltas):
        return False
    bb = b.bindings
    return all(bb.get(idx) == alt for idx, alt in a.bindings.items())


def monomial_eval(mono: Monomial, assignment: Assignment) -> Coefficient:
    for d in mono.deltas:
        if assignment[d.index] != d.alternative:
            return ZERO
    return mono.scalar


def _eliminate(monomials: Iterable[Monomial]) -> list[Monomial]:
    # Processing order puts every potential container first: smaller guard
    # sets first, and the larger scalar first among identical guards.
    pending = sorted(
        (m for m in monomials if not m.is_zero),
        key=lambda m: (len(m.deltas), _delta_key(m.deltas), -m.scalar),
    )
    kept: list[Monomial] = []
    best: dict[tuple[Delta, ...], Coefficient] = {}
    for mono in pending:
        if _dominated(mono, kept, best):
            continue
        kept.append(mono)
        best[mono.deltas] = mono.scalar
    return kept


def _merges(kept: list[Monomial]) -> list[Monomial]:
    """Monomials implied by full covers of one index.

    If ``(s_a, rest + (a, k))`` is present for every alternative ``a``, then
    under any assignment satisfying ``rest`` the join is at least
    ``min(s_a)``, so ``(min(s_a), rest)`` can be added without changing the
    polynomial's value anywhere.
    """
    covers: dict[tuple, dict[int, Coefficient]] = {}
    for mono in kept:
        for pos, d in enumerate(mono.deltas):
            key = (mono.deltas[:pos] + mono.deltas[pos + 1:], d.index)
            covers.setdefault(key, {})[d.alternative] = mono.scalar
    return [
        Monomial(min(alts.values()), rest)
        for (rest, _), alts in covers.items()
        if len(alts) == len(ALTERNATIVES)
    ]


def _canonical(monomials: Iterable[Monomial]) -> tuple[Monomial, ...]:
    kept = _eliminate(monomials)
    while True:
        merged = _merges(kept)
        if not merged:
            return tuple(kept)
        grown = _eliminate(kept + merged)
        if grown == kept:
            return tuple(kept)
        kept = grown


def _dominated(mono, kept, best) -> bool:
    n = len(mono.deltas)
    # Look subsets up directly when that is cheaper than scanning.
    if (1 << n) <= len(kept):
        for size in range(n + 1):
            for sub in combinations(mono.deltas, size):
                s = best.get(sub)
                if s is not None and s >= mono.scalar:
                    return True
        return False
    return any(monomial_contains(k, mono) for k in kept)


class Polynomial:
    """Immutable canonical list of monomials; the empty list is zero."""

    __slots__ = ("monomials", "_hash")

    def __init__(self, monomials: Iterable[Monomial] = ()):
        self.monomials: tuple[Monomial, ...] = _canonical(monomials)
        self._hash = None

    @classmethod
    def constant(cls, scalar: Coefficient) -> Polynomial:
        return cls([Monomial(scalar)])

    @property
    def is_zero(self) -> bool:
        return not self.monomials

    def __iter__(self):
        return iter(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.monomials == other.monomials

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.monomials)
        return self._hash

    def __add__(self, other: Polynomial) -> Polynomial:
        return poly_add(self, other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        return poly_times(self, other)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.monomials)!r})"

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        return " + ".join(str(m) for m in self.monomials)

    def indices(self) -> set[int]:
        return {d.index for m in self.monomials for d in m.deltas}

    def infinite_guards(self) -> list[tuple[Delta, ...]]:
        return [m.deltas for m in self.monomials if m.scalar is INF]


ZERO_POLY = Polynomial()
UNIT_POLY = Polynomial.constant(Coefficient.M)


def canonicalize(monomials: Iterable[Monomial]) -> Polynomial:
    return Polynomial(monomials)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero:
        return b
    if b.is_zero or a is b:
        return a
    return Polynomial(a.monomials + b.monomials)


def poly_times(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero or b.is_zero:
        return ZERO_POLY
    if a == UNIT_POLY:
        return b
    if b == UNIT_POLY:
        return a
    return Polynomial(monomial_product(x, y) for x in a.monomials for y in b.monomials)


def poly_eval(p: Polynomial, assignment: Assignment) -> Coefficient:
    value = ZERO
    for mono in p.monomials:
        value = join(value, monomial_eval(mono, assignment))
    return value
