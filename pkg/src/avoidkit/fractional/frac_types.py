from __future__ import annotations

from dataclasses import dataclass, field

from avoidkit.avoidance.avoid_types import AvoidingPair, IndexSet, check_disjoint
from avoidkit.errors import InputError
from avoidkit.geometry.geom_types import Orientation, Point
from avoidkit.geometry.predicates import orient_sign


@dataclass(frozen=True)
class SupportPair:
    """
    Every fourth point of each side of an avoiding pair, in radial order. The full
    radial orders are kept so the points between support points can be found.
    """

    a_prime: tuple[int, ...]
    b_prime: tuple[int, ...]
    source: AvoidingPair
    a_order: tuple[int, ...]
    b_order: tuple[int, ...]


@dataclass(frozen=True)
class Wedge:
    """
    An open region: the intersection of half-planes, each given by an oriented
    line through two points and the orientation a member must have.
    """

    constraints: tuple[tuple[tuple[Point, Point], Orientation], ...]

    def __post_init__(self) -> None:
        if not self.constraints:
            raise InputError("A wedge needs at least one bounding line")
        for (p, q), _ in self.constraints:
            if p == q:
                raise InputError("A bounding line needs two distinct points")

    def contains(self, x: Point) -> bool:
        return all(orient_sign((p, q, x)) == req for (p, q), req in self.constraints)


@dataclass(frozen=True)
class RegionFamily:
    """
    The A-side and B-side wedges with the points of P strictly inside each.
    """

    a_regions: tuple[Wedge, ...]
    b_regions: tuple[Wedge, ...]
    members_a: tuple[tuple[int, ...], ...]
    members_b: tuple[tuple[int, ...], ...]

    @property
    def counts_a(self) -> list[int]:
        return [len(m) for m in self.members_a]

    @property
    def counts_b(self) -> list[int]:
        return [len(m) for m in self.members_b]


@dataclass(frozen=True)
class FractionalFamily:
    """
    Parts A_1..A_k and B_1..B_k, pairwise disjoint and nonempty.
    """

    a_parts: tuple[IndexSet, ...]
    b_parts: tuple[IndexSet, ...]

    def __post_init__(self) -> None:
        if len(self.a_parts) != len(self.b_parts):
            raise InputError(f"Need k parts per side, got {len(self.a_parts)} and {len(self.b_parts)}")
        for part in (*self.a_parts, *self.b_parts):
            if not part:
                raise InputError("Fractional family parts must be nonempty")
        check_disjoint(*self.a_parts, *self.b_parts)

    @property
    def k(self) -> int:
        return len(self.a_parts)

    @property
    def parts(self) -> tuple[IndexSet, ...]:
        return (*self.a_parts, *self.b_parts)

    @property
    def min_part_size(self) -> int:
        return min(len(p) for p in self.parts)


@dataclass(frozen=True)
class CheckVerdict:
    """
    Outcome of a transversal check: how it was decided, how many transversals were
    checked, and the first one that failed, if any.
    """

    ok: bool
    method: str
    checked: int
    seed: int | None = None
    counterexample: tuple[int, ...] | None = field(default=None)
