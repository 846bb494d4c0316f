from __future__ import annotations

import logging
from collections.abc import Sequence

from avoidkit.errors import DegenerateInput, InputError
from avoidkit.fractional.frac_types import RegionFamily, SupportPair, Wedge
from avoidkit.geometry.geom_types import Orientation, Point, PointSeq
from avoidkit.geometry.predicates import orient_sign

log = logging.getLogger(__name__)


def _witness(P: PointSeq, order: Sequence[int], i: int, p: Point, q: Point) -> Point:
    """
    A point known to lie in the i-th region: the middle original point between the
    two support points in radial order, or the midpoint of the support segment.
    """
    pos = 4 * i + 2
    if pos < len(order):
        return P[order[pos]]
    return tuple((a + b) / 2 for a, b in zip(p, q, strict=True))


def _wedge(apexes: tuple[Point, Point], ends: tuple[Point, Point], witness: Point) -> Wedge:
    constraints: list[tuple[tuple[Point, Point], Orientation]] = []
    for apex in apexes:
        for end in ends:
            side = orient_sign((apex, end, witness))
            if side == 0:
                raise DegenerateInput("A region witness lies on a bounding line; the support is degenerate")
            constraints.append(((apex, end), Orientation(side)))
    return Wedge(tuple(constraints))


def _side_regions(
    P: PointSeq, support_pts: Sequence[int], order: Sequence[int], apexes: tuple[Point, Point]
) -> list[Wedge]:
    wedges: list[Wedge] = []
    for i in range(len(support_pts) - 1):
        p, q = P[support_pts[i]], P[support_pts[i + 1]]
        wedges.append(_wedge(apexes, (p, q), _witness(P, order, i, p, q)))
    return wedges


def _members(P: PointSeq, wedges: Sequence[Wedge]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(j for j, x in enumerate(P.points) if w.contains(x)) for w in wedges)


def build_regions(P: PointSeq, support: SupportPair) -> RegionFamily:
    """
    For consecutive support points a'_i, a'_{i+1}, the open region bounded by the
    four lines from the first and last B-support points to them, and symmetrically
    for the B side. Membership is strict, so support points are never counted.
    """
    m = len(support.a_prime)
    if m < 2 or len(support.b_prime) != m:
        raise InputError(f"Regions need supports of equal size at least 2, got {m} and {len(support.b_prime)}")

    b_apexes = (P[support.b_prime[0]], P[support.b_prime[-1]])
    a_apexes = (P[support.a_prime[0]], P[support.a_prime[-1]])
    a_regions = _side_regions(P, support.a_prime, support.a_order, b_apexes)
    b_regions = _side_regions(P, support.b_prime, support.b_order, a_apexes)
    family = RegionFamily(
        a_regions=tuple(a_regions),
        b_regions=tuple(b_regions),
        members_a=_members(P, a_regions),
        members_b=_members(P, b_regions),
    )
    log.debug("Region counts: alpha=%s beta=%s", family.counts_a, family.counts_b)
    return family


def select_dense_regions(rf: RegionFamily, k: int) -> tuple[list[int], list[int]]:
    """
    The k regions with the most points on each side, ties to the smaller index,
    returned in increasing index order. Indices are 0-based.
    """
    if k < 1:
        raise InputError(f"k must be positive, got {k}")

    def top(counts: list[int]) -> list[int]:
        if len(counts) < k:
            raise InputError(f"Need at least {k} regions per side, have {len(counts)}")
        ranked = sorted(range(len(counts)), key=lambda i: (-counts[i], i))
        return sorted(ranked[:k])

    return top(rf.counts_a), top(rf.counts_b)
