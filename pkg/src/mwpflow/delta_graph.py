"""Forbidden choice fragments and the passing-choice computation.

Every monomial that reaches the ``i`` coefficient contributes its guard (a
list of deltas) as a forbidden fragment: any assignment matching all of its
deltas produces an unbounded flow.  Guards are stored in layers by length.
Inside a layer, guards over the same indices are linked by an edge weighted
with the number of indices where their alternatives differ; three guards
pairwise at distance 1 on the same index that cover every alternative
collapse into their common part (fusion).
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterable, Iterator, Sequence

from .choice_algebra import ALTERNATIVES, Delta

Guard = tuple[Delta, ...]


def _canonical_guard(guard: Iterable) -> Guard:
    deltas = sorted((Delta(*d) for d in guard), key=Delta.sort_key)
    seen = set()
    for d in deltas:
        if d.index in seen:
            raise ValueError(f"index {d.index} appears twice in guard")
        seen.add(d.index)
    return tuple(deltas)


def _is_subguard(small: Guard, big: Guard) -> bool:
    return len(small) <= len(big) and set(small) <= set(big)


def _distance(a: Guard, b: Guard) -> int | None:
    """Number of differing alternatives, for guards over the same indices."""
    if len(a) != len(b) or any(x.index != y.index for x, y in zip(a, b)):
        return None
    return sum(x.alternative != y.alternative for x, y in zip(a, b))


class DeltaGraph:
    def __init__(self, guards: Iterable = ()):
        self.layers: dict[int, set[Guard]] = defaultdict(set)
        self.edges: dict[Guard, dict[Guard, int]] = {}
        for g in guards:
            self.insert(g)

    def __iter__(self) -> Iterator[Guard]:
        for size in sorted(self.layers):
            yield from sorted(self.layers[size], key=lambda g: [d.sort_key() for d in g])

    def __len__(self) -> int:
        return sum(len(layer) for layer in self.layers.values())

    def __contains__(self, guard) -> bool:
        guard = _canonical_guard(guard)
        return guard in self.layers.get(len(guard), ())

    def __eq__(self, other) -> bool:
        if not isinstance(other, DeltaGraph):
            return NotImplemented
        return list(self) == list(other)

    @property
    def forbids_everything(self) -> bool:
        return () in self.layers.get(0, ())

    def _remove(self, guard: Guard) -> None:
        self.layers[len(guard)].discard(guard)
        if not self.layers[len(guard)]:
            del self.layers[len(guard)]
        for other in self.edges.pop(guard, {}):
            self.edges[other].pop(guard, None)

    def _add(self, guard: Guard) -> None:
        layer = self.layers[len(guard)]
        links = {}
        for other in layer:
            w = _distance(guard, other)
            if w is not None:
                links[other] = w
                self.edges[other][guard] = w
        layer.add(guard)
        self.edges[guard] = links

    def insert(self, guard) -> DeltaGraph:
        """Add a forbidden fragment unless a weaker one already covers it."""
        guard = _canonical_guard(guard)
        for size in sorted(self.layers):
            if size > len(guard):
                break
            if any(_is_subguard(g, guard) for g in self.layers[size]):
                return self
        for size in [s for s in self.layers if s > len(guard)]:
            for g in [g for g in self.layers[size] if _is_subguard(guard, g)]:
                self._remove(g)
        self._add(guard)
        return self

    def _find_fusion(self) -> tuple[list[Guard], Guard] | None:
        for size in sorted(self.layers, reverse=True):
            for guard in self.layers[size]:
                for pos, d in enumerate(guard):
                    group = {d.alternative: guard}
                    for other, w in self.edges[guard].items():
                        if w == 1 and other[pos].alternative != d.alternative:
                            group[other[pos].alternative] = other
                    if len(group) == len(ALTERNATIVES):
                        return list(group.values()), guard[:pos] + guard[pos + 1:]
        return None

    def fusion(self) -> DeltaGraph:
        """Collapse full covers of one index until none remain."""
        while (found := self._find_fusion()) is not None:
            triangle, common = found
            for g in triangle:
                self._remove(g)
            self.insert(common)
        return self

    def forbids(self, assignment) -> bool:
        return any(
            all(assignment[d.index] == d.alternative for d in g)
            for layer in self.layers.values()
            for g in layer
        )

    def passing_assignments(self, num_indices: int) -> ChoiceSet:
        return ChoiceSet(num_indices, _split(list(self), {}, num_indices))

    def to_dict(self) -> dict[str, list]:
        return {
            str(size): [[list(d) for d in g] for g in self if len(g) == size]
            for size in sorted(self.layers)
        }


def _split(guards: list[Guard], fixed: dict[int, frozenset[int]], num_indices: int):
    # Shannon expansion on the most constrained index; alternatives sharing
    # the same residual guard set stay in one product-form fragment.
    if any(not g for g in guards):
        return []
    if not guards:
        return [dict(fixed)]
    counts = Counter(d.index for g in guards for d in g)
    index = min(counts, key=lambda k: (-counts[k], k))
    if index >= num_indices:
        raise ValueError(f"guard index {index} outside 0..{num_indices - 1}")
    groups: dict[tuple[Guard, ...], list[int]] = {}
    for alt in ALTERNATIVES:
        residual = []
        for g in guards:
            hit = next((d for d in g if d.index == index), None)
            if hit is None:
                residual.append(g)
            elif hit.alternative == alt:
                residual.append(tuple(d for d in g if d.index != index))
        groups.setdefault(tuple(residual), []).append(alt)
    out = []
    for residual, alts in groups.items():
        out.extend(_split(list(residual), {**fixed, index: frozenset(alts)}, num_indices))
    return out


@dataclass(frozen=True)
class ChoiceSet:
    """Assignments over ``num_indices`` points, as disjoint product fragments.

    Each fragment maps some indices to their allowed alternatives; indices it
    omits are unconstrained.
    """

    num_indices: int
    fragments: tuple[dict[int, frozenset[int]], ...]

    def __init__(self, num_indices: int, fragments: Iterable[dict] = ()):
        object.__setattr__(self, "num_indices", num_indices)
        frags = tuple(
            {k: frozenset(v) for k, v in sorted(f.items())} for f in fragments
        )
        object.__setattr__(self, "fragments", frags)

    @classmethod
    def everything(cls, num_indices: int) -> ChoiceSet:
        return cls(num_indices, [{}])

    def __bool__(self) -> bool:
        return bool(self.fragments)

    def count(self) -> int:
        n = len(ALTERNATIVES)
        return sum(
            prod(len(v) for v in f.values()) * n ** (self.num_indices - len(f))
            for f in self.fragments
        )

    def __contains__(self, assignment: Sequence[int]) -> bool:
        return any(
            all(assignment[k] in allowed for k, allowed in f.items())
            for f in self.fragments
        )

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return self.expand()

    def expand(self) -> Iterator[tuple[int, ...]]:
        for f in self.fragments:
            axes = [sorted(f.get(k, ALTERNATIVES)) for k in range(self.num_indices)]
            yield from product(*axes)

    def to_list(self) -> list[list]:
        return [[[k, sorted(v)] for k, v in f.items()] for f in self.fragments]

    @classmethod
    def from_list(cls, num_indices: int, data) -> ChoiceSet:
        return cls(num_indices, [{k: frozenset(v) for k, v in f} for f in data])
