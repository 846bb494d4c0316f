from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from avoidkit.avoidance.avoid_types import IndexSet
from avoidkit.config.settings import get_settings
from avoidkit.errors import InputError
from avoidkit.geometry.geom_types import PointSeq
from avoidkit.sametype.transversals import CheckMethod, check_same_type

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartitionParts:
    """
    Disjoint nonempty parts, with the smallest part as a fraction of n, the method
    that verified them, and whether the singleton fallback was used.
    """

    parts: tuple[IndexSet, ...]
    fraction: Fraction
    method: CheckMethod
    fallback: bool = False

    def __post_init__(self) -> None:
        if any(not p for p in self.parts):
            raise InputError("Partition parts must be nonempty")


def equitable_blocks(order: Sequence[int], k: int) -> list[list[int]]:
    """Contiguous blocks whose sizes differ by at most one, larger blocks first."""
    n = len(order)
    size, extra = divmod(n, k)
    blocks: list[list[int]] = []
    start = 0
    for i in range(k):
        end = start + size + (1 if i < extra else 0)
        blocks.append(list(order[start:end]))
        start = end
    return blocks


def nearest_to_centroid(P: PointSeq, members: Sequence[int]) -> list[int]:
    """Members sorted by squared distance to their centroid, ties by index."""
    c = P.centroid(members)

    def dist2(i: int) -> tuple[Fraction, int]:
        return sum(((a - b) ** 2 for a, b in zip(P[i], c, strict=True)), Fraction(0)), i

    return sorted(members, key=dist2)


def same_type_partition(
    P: PointSeq,
    k: int,
    *,
    levels: int | None = None,
    exhaustive_cap: int | None = None,
) -> PartitionParts:
    """
    k disjoint parts with same-type transversals. Points are sorted by first
    coordinate and cut into k contiguous blocks; each block keeps the half nearest
    its centroid until the parts verify. Only exhaustive or separation evidence is
    accepted. If no level verifies, the part members nearest the centroids are used
    as singleton parts.
    """
    n = len(P)
    d = P.dim
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    if n < k * (d + 1):
        raise InputError(f"Need at least k(d+1) = {k * (d + 1)} points, got {n}")
    levels = levels if levels is not None else get_settings().partition_levels

    order = sorted(range(n), key=lambda i: (P[i][0], i))
    ranked = [nearest_to_centroid(P, block) for block in equitable_blocks(order, k)]
    sizes = [len(block) for block in ranked]

    for level in range(levels + 1):
        parts = tuple(tuple(sorted(block[: max(1, size)])) for block, size in zip(ranked, sizes, strict=True))
        verdict = check_same_type(P, parts, exhaustive_cap=exhaustive_cap, allow_sampling=False)
        if verdict.same_type:
            fraction = Fraction(min(len(p) for p in parts), n)
            singletons = level > 0 and all(len(p) == 1 for p in parts)
            if singletons:
                log.warning("Same-type partition shrank to singleton parts")
            else:
                log.info("Same-type partition at level %s, fraction %s, by %s", level, fraction, verdict.method.value)
            return PartitionParts(parts, fraction, verdict.method, fallback=singletons)
        if all(size <= 1 for size in sizes):
            break
        sizes = [max(1, size // 2) for size in sizes]

    log.warning("No same-type partition verified; falling back to singleton parts")
    parts = tuple((block[0],) for block in ranked)
    return PartitionParts(parts, Fraction(1, n), CheckMethod.exhaustive, fallback=True)
