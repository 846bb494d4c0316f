from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from avoidkit.errors import DegenerateInput, InputError, NoIntersection
from avoidkit.geometry.geom_types import Hyperplane, Point
from avoidkit.geometry.predicates import hyperplane_coeffs


def hyperplane_through(points: Sequence[Point]) -> Hyperplane:
    """
    The oriented hyperplane spanned by d points in R^d. For any q,
    `hyperplane_through(points).side(q) == orient([*points, q])`.
    """
    if not points:
        raise InputError("A hyperplane needs at least one point")
    d = len(points[0])
    if len(points) != d or any(len(p) != d for p in points):
        raise InputError(f"A hyperplane in R^{d} is spanned by exactly {d} points of dimension {d}")
    normal, offset = hyperplane_coeffs(points)
    if not any(normal):
        raise DegenerateInput("Points spanning the hyperplane are affinely dependent")
    return Hyperplane(tuple(Fraction(c) for c in normal), Fraction(offset))


def line_hyperplane_intersection(p: Point, q: Point, h: Hyperplane) -> Point:
    """
    The point where the line through p and q meets h.
    """
    if len(p) != h.dim or len(q) != h.dim:
        raise InputError(f"Points must have dimension {h.dim}")
    if p == q:
        raise DegenerateInput("A line needs two distinct points")
    direction = [b - a for a, b in zip(p, q, strict=True)]
    denom = sum((n * v for n, v in zip(h.normal, direction, strict=True)), Fraction(0))
    if denom == 0:
        if h.contains(p):
            raise DegenerateInput("The line lies inside the hyperplane")
        raise NoIntersection("The line is parallel to the hyperplane")
    t = -h.evaluate(p) / denom
    return tuple(a + t * v for a, v in zip(p, direction, strict=True))
