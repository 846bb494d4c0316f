from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import TypeAlias

from avoidkit.errors import InputError
from avoidkit.geometry.geom_types import PointSeq

IndexSet: TypeAlias = tuple[int, ...]
"""Sorted, distinct indices into a PointSeq."""

Simplex: TypeAlias = tuple[int, ...]
"""Vertex indices of a (d-1)-simplex in R^d. In the plane this is a segment."""


def index_set(indices: Iterable[int], n: int | None = None) -> IndexSet:
    """
    Validate and sort an index set, optionally checking bounds against `n` points.
    """
    items = tuple(sorted(indices))
    if len(set(items)) != len(items):
        raise InputError(f"Repeated index in {list(items)}")
    if n is not None and items and (items[0] < 0 or items[-1] >= n):
        raise InputError(f"Index out of range for {n} points: {list(items)}")
    return items


def check_disjoint(*sets: Sequence[int]) -> None:
    seen: set[int] = set()
    for s in sets:
        overlap = seen.intersection(s)
        if overlap:
            raise InputError(f"Index sets overlap at {sorted(overlap)}")
        seen.update(s)


def check_simplex(P: PointSeq, simplex: Sequence[int]) -> Simplex:
    if len(simplex) != P.dim:
        raise InputError(f"A simplex in R^{P.dim} has {P.dim} vertices, got {len(simplex)}")
    if len(set(simplex)) != len(simplex):
        raise InputError(f"Repeated vertex in simplex {list(simplex)}")
    if any(not 0 <= i < len(P) for i in simplex):
        raise InputError(f"Simplex vertex out of range: {list(simplex)}")
    return tuple(simplex)


@dataclass(frozen=True)
class AvoidingPair:
    """
    Two disjoint index sets. `verified` is set only after a mutual avoidance check.
    """

    a: IndexSet
    b: IndexSet
    verified: bool = False

    def __post_init__(self) -> None:
        check_disjoint(self.a, self.b)

    @property
    def min_size(self) -> int:
        return min(len(self.a), len(self.b))

    def trimmed(self, size: int) -> AvoidingPair:
        """
        Both sides cut down to their first `size` indices. Subsets of a mutually
        avoiding pair are mutually avoiding, so the flag carries over.
        """
        return AvoidingPair(self.a[:size], self.b[:size], self.verified)


@dataclass(frozen=True)
class CrossingFamily:
    """
    Simplices given by vertex indices. `verified` means every pair was checked to
    strongly cross.
    """

    simplices: tuple[Simplex, ...] = field(default_factory=tuple)
    verified: bool = False

    def __len__(self) -> int:
        return len(self.simplices)
