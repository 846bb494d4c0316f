from __future__ import annotations

from avoidkit.avoidance.avoid_predicates import mutually_avoiding
from avoidkit.avoidance.avoid_types import AvoidingPair
from avoidkit.avoidance.crossing import radial_labels
from avoidkit.errors import InputError
from avoidkit.fractional.frac_types import SupportPair
from avoidkit.geometry.geom_types import PointSeq


def support_of(P: PointSeq, pair: AvoidingPair) -> SupportPair:
    """
    Label A clockwise around a point of B and B counterclockwise around a point of
    A, then keep the labels 1, 5, 9, ... of each side.
    """
    if P.dim != 2:
        raise InputError(f"Supports are planar, got dimension {P.dim}")
    size = len(pair.a)
    if size != len(pair.b):
        raise InputError(f"Sides must have equal size, got {len(pair.a)} and {len(pair.b)}")
    if size % 4 != 1:
        raise InputError(f"Side size must be 1 mod 4, got {size}")
    if not pair.verified and not mutually_avoiding(P, pair.a, pair.b):
        raise InputError("The pair is not mutually avoiding")

    a_order, b_order = radial_labels(P, pair)
    return SupportPair(
        a_prime=tuple(a_order[::4]),
        b_prime=tuple(b_order[::4]),
        source=pair,
        a_order=tuple(a_order),
        b_order=tuple(b_order),
    )
