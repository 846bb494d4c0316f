from __future__ import annotations

from avoidkit.errors import InputError
from avoidkit.geometry.geom_types import PointSeq


def _cross(o: tuple[int, ...], a: tuple[int, ...], b: tuple[int, ...]) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(P: PointSeq) -> list[int]:
    """
    Indices of the convex hull vertices of a planar point set, counterclockwise,
    starting at the lexicographically smallest vertex. Points on hull edges are not
    vertices. A collinear set gives its two extreme points.

    Monotone chain over exact integer coordinates.
    """
    if P.dim != 2:
        raise InputError(f"convex_hull_2d needs planar points, got dimension {P.dim}")
    if len(P) == 0:
        raise InputError("Convex hull of an empty point set")
    pts = P.int_points
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    if len(order) <= 2:
        return order

    def half(indices: list[int]) -> list[int]:
        chain: list[int] = []
        for i in indices:
            while len(chain) >= 2 and _cross(pts[chain[-2]], pts[chain[-1]], pts[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(order)
    upper = half(order[::-1])
    hull = lower[:-1] + upper[:-1]
    return hull
