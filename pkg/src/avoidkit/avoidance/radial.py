from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import cmp_to_key

from avoidkit.avoidance.avoid_types import IndexSet
from avoidkit.errors import InputError
from avoidkit.geometry.geom_types import Point, PointSeq


class Sense(str, Enum):
    clockwise = "clockwise"
    counterclockwise = "counterclockwise"

    def reverse(self) -> Sense:
        return Sense.counterclockwise if self == Sense.clockwise else Sense.clockwise


def _cross(u: tuple[Fraction, Fraction], v: tuple[Fraction, Fraction]) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def radial_order(P: PointSeq, A: IndexSet, pivot: Point, sense: Sense) -> list[int]:
    """
    Indices of A sorted by angle around `pivot`.

    The sweep starts at the direction pointing from centroid(A) through the pivot,
    which for a set seen from outside its hull lies in the angular gap, so the
    cyclic order has a canonical first element. If the pivot is the centroid the
    sweep starts at the positive x-axis. Equal angles are ordered by index.
    """
    if P.dim != 2:
        raise InputError(f"Radial order is planar, got dimension {P.dim}")
    if len(pivot) != 2:
        raise InputError("Pivot must be a planar point")
    if not A:
        return []
    for i in A:
        if P[i] == pivot:
            raise InputError(f"Pivot coincides with point {i}")

    cx, cy = P.centroid(A)
    ref = (pivot[0] - cx, pivot[1] - cy)
    if ref == (0, 0):
        ref = (Fraction(1), Fraction(0))
    turn = 1 if sense == Sense.counterclockwise else -1
    vecs = {i: (P[i][0] - pivot[0], P[i][1] - pivot[1]) for i in A}

    def half(v: tuple[Fraction, Fraction]) -> int:
        c = _cross(ref, v) * turn
        if c > 0:
            return 0
        if c == 0 and ref[0] * v[0] + ref[1] * v[1] > 0:
            return 0
        return 1

    def compare(i: int, j: int) -> int:
        u, v = vecs[i], vecs[j]
        hu, hv = half(u), half(v)
        if hu != hv:
            return hu - hv
        c = _cross(u, v) * turn
        if c > 0:
            return -1
        if c < 0:
            return 1
        return i - j

    return sorted(A, key=cmp_to_key(compare))
