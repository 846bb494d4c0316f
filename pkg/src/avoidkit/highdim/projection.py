from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from avoidkit.avoidance.avoid_types import IndexSet
from avoidkit.errors import InputError, InternalError, NoIntersection
from avoidkit.geometry.flats import line_hyperplane_intersection
from avoidkit.geometry.geom_types import Hyperplane, Orientation, Point, PointSeq
from avoidkit.sametype.order_type import order_type


def chart_coordinate(h: Hyperplane) -> int:
    """The coordinate dropped by the chart: largest |normal| component, lowest index."""
    magnitudes = [abs(c) for c in h.normal]
    return magnitudes.index(max(magnitudes))


def to_chart(x: Point, dropped: int) -> Point:
    return x[:dropped] + x[dropped + 1 :]


@dataclass(frozen=True)
class ProjectionFrame:
    """
    The points of B seen from one apex in A, projected onto the separating plane
    and written in the chart that drops coordinate `dropped`. `images[j]` is the
    projection of `sources[j]`.
    """

    apex_index: int
    plane: Hyperplane
    dropped: int
    sources: IndexSet
    images: PointSeq


def project_through(P: PointSeq, A: IndexSet, B: IndexSet, h: Hyperplane) -> list[ProjectionFrame]:
    """
    One frame per apex a in A, with images of the lines from a to each b in B.
    """
    if P.dim < 2:
        raise InputError("Projection needs dimension at least 2")
    a_sides = {h.side(P[i]) for i in A}
    b_sides = {h.side(P[i]) for i in B}
    if len(a_sides) != 1 or len(b_sides) != 1 or a_sides == b_sides or Orientation.ZERO in a_sides | b_sides:
        raise InputError("The hyperplane does not strictly separate A from B")

    dropped = chart_coordinate(h)
    frames: list[ProjectionFrame] = []
    for a in A:
        try:
            images = [to_chart(line_hyperplane_intersection(P[a], P[b], h), dropped) for b in B]
        except NoIntersection as e:
            raise InternalError(f"Line from apex {a} is parallel to a separating plane: {e}") from e
        frames.append(ProjectionFrame(a, h, dropped, tuple(B), PointSeq(P.dim - 1, tuple(images))))
    return frames


def frames_agree(frames: Sequence[ProjectionFrame]) -> bool:
    """True iff every frame's images have the same order type."""
    if not frames:
        return True
    first = order_type(frames[0].images)
    return all(order_type(f.images) == first for f in frames[1:])
