import pytest

from avoidkit.avoidance.avoid_predicates import (
    SideTable,
    avoids,
    is_crossing_family,
    mutually_avoiding,
    relative_interiors_meet,
    segments_cross,
    strongly_cross,
)
from avoidkit.avoidance.avoid_types import AvoidingPair, index_set
from avoidkit.avoidance.crossing import (
    crossing_family_from_avoiding,
    max_crossing_family_bruteforce,
    radial_labels,
)
from avoidkit.avoidance.radial import Sense, radial_order
from avoidkit.errors import CapExceeded, InputError
from avoidkit.geometry.geom_types import PointSeq, as_point
from avoidkit.geometry.predicates import general_position

TWO_CLUSTERS = PointSeq.of([(0, 0), (1, 0), (0, 100), (1, 101)])

SQUARE = PointSeq.of([(0, 0), (1, 1), (1, 0), (0, 1)])

HEXAGON = PointSeq.of([(0, 0), (2, 0), (3, 2), (2, 4), (0, 4), (-1, 2)])

# Two convex chains far apart: A bends up near y=0, B bends down near y=1000.
CHAINS = PointSeq.of(
    [(0, 0), (10, 1), (20, 3), (30, 6), (0, 1000), (10, 999), (20, 997), (30, 994)]
)


def test_avoids() -> None:
    assert avoids(TWO_CLUSTERS, (0, 1), (2, 3))
    assert not avoids(SQUARE, (0, 1), (2, 3))
    # A single point spans no line.
    assert avoids(SQUARE, (0,), (1, 2, 3))


def test_mutually_avoiding() -> None:
    assert mutually_avoiding(TWO_CLUSTERS, (0, 1), (2, 3))
    assert not mutually_avoiding(SQUARE, (0, 1), (2, 3))
    assert mutually_avoiding(SQUARE, (0,), (1,))
    with pytest.raises(InputError):
        mutually_avoiding(SQUARE, (0, 1), (1, 2))
    with pytest.raises(InputError):
        mutually_avoiding(SQUARE, (0, 9), (1, 2))


def test_side_table_agrees_with_predicate() -> None:
    table = SideTable.build(CHAINS)
    assert table.avoids((0, 1, 2, 3), 0b11110000)
    assert table.avoids((4, 5, 6, 7), 0b00001111)
    # The vertical line x=10 splits x=0 from x=20.
    assert not table.avoids((1, 5), 0b101)
    assert not avoids(CHAINS, (1, 5), (0, 2))


def test_index_set() -> None:
    assert index_set([3, 1, 2]) == (1, 2, 3)
    with pytest.raises(InputError):
        index_set([1, 1])
    with pytest.raises(InputError):
        index_set([0, 4], n=4)


def test_radial_order() -> None:
    P = PointSeq.of([(1, 0), (0, 1), (-1, 0)])
    pivot = as_point((0, -5))
    assert radial_order(P, (0, 1, 2), pivot, Sense.counterclockwise) == [0, 1, 2]
    assert radial_order(P, (0, 1, 2), pivot, Sense.clockwise) == [2, 1, 0]
    assert radial_order(P, (1,), pivot, Sense.clockwise) == [1]
    assert radial_order(P, (), pivot, Sense.clockwise) == []
    with pytest.raises(InputError):
        radial_order(P, (0, 1), as_point((1, 0)), Sense.clockwise)


def test_sense_reverse() -> None:
    assert Sense.clockwise.reverse() == Sense.counterclockwise
    assert Sense.counterclockwise.reverse() == Sense.clockwise


def test_radial_labels_independent_of_pivot() -> None:
    pair = AvoidingPair((0, 1, 2, 3), (4, 5, 6, 7))
    a_order, b_order = radial_labels(CHAINS, pair)
    for b in pair.b:
        assert radial_order(CHAINS, pair.a, CHAINS[b], Sense.clockwise) == a_order
    for a in pair.a:
        assert radial_order(CHAINS, pair.b, CHAINS[a], Sense.counterclockwise) == b_order


def test_strongly_cross_planar() -> None:
    assert strongly_cross(SQUARE, (0, 1), (2, 3))
    assert not strongly_cross(SQUARE, (0, 1), (1, 2))
    assert not strongly_cross(SQUARE, (0, 2), (3, 1))
    with pytest.raises(InputError):
        strongly_cross(SQUARE, (0, 1, 2), (3, 1))


def test_strongly_cross_triangles() -> None:
    P = PointSeq.of(
        [
            (0, 0, 0),
            (4, 0, 0),
            (0, 4, 0),
            # An edge of this triangle pierces the first at (1, 1, 0).
            (1, 1, -1),
            (1, 1, 1),
            (-3, -2, -1),
            # Same shape moved clear of the first triangle.
            (10, 10, -1),
            (10, 10, 1),
            (12, 9, 0),
        ]
    )
    assert strongly_cross(P, (0, 1, 2), (3, 4, 5))
    assert strongly_cross(P, (3, 4, 5), (0, 1, 2))
    assert not strongly_cross(P, (0, 1, 2), (6, 7, 8))
    assert not strongly_cross(P, (0, 1, 2), (2, 3, 4))


def test_relative_interiors_meet_segments_in_space() -> None:
    assert relative_interiors_meet([(0, 0, 0), (2, 2, 2)], [(0, 2, 0), (2, 0, 2)])
    assert not relative_interiors_meet([(0, 0, 0), (2, 2, 2)], [(0, 2, 0), (2, 0, 0)])
    # Touching at an endpoint is not an interior meeting.
    assert not relative_interiors_meet([(0, 0), (2, 0)], [(2, 0), (2, 2)])


def test_is_crossing_family() -> None:
    P = PointSeq.of([(0, 0), (1, 1), (1, 0), (0, 1), (5, 5), (6, 5)])
    assert is_crossing_family(P, [(0, 1), (2, 3)])
    assert not is_crossing_family(P, [(0, 1), (2, 3), (4, 5)])
    assert is_crossing_family(P, [])
    assert is_crossing_family(P, [(4, 5)])


def test_crossing_family_from_avoiding_two_clusters() -> None:
    fam = crossing_family_from_avoiding(TWO_CLUSTERS, AvoidingPair((0, 1), (2, 3)))
    assert len(fam) == 2
    assert fam.verified
    assert is_crossing_family(TWO_CLUSTERS, fam.simplices)


def test_crossing_family_from_avoiding_four() -> None:
    assert general_position(CHAINS)
    pair = AvoidingPair((0, 1, 2, 3), (4, 5, 6, 7))
    fam = crossing_family_from_avoiding(CHAINS, pair)
    assert len(fam) == 4
    assert is_crossing_family(CHAINS, fam.simplices)
    used = sorted(i for s in fam.simplices for i in s)
    assert used == list(range(8))


def test_crossing_family_from_avoiding_single_and_errors() -> None:
    fam = crossing_family_from_avoiding(SQUARE, AvoidingPair((0,), (2,)))
    assert fam.simplices == ((0, 2),)
    with pytest.raises(InputError):
        crossing_family_from_avoiding(SQUARE, AvoidingPair((0, 1), (2, 3)))
    with pytest.raises(InputError):
        crossing_family_from_avoiding(SQUARE, AvoidingPair((0, 1), (2,)))


def test_max_crossing_family_bruteforce() -> None:
    square = max_crossing_family_bruteforce(SQUARE)
    assert len(square) == 2
    assert square.verified

    triangle = max_crossing_family_bruteforce(PointSeq.of([(0, 0), (4, 0), (1, 3)]))
    assert len(triangle) == 1

    hexagon = max_crossing_family_bruteforce(HEXAGON)
    assert len(hexagon) == 3
    assert hexagon.simplices == ((0, 3), (1, 4), (2, 5))


def test_max_crossing_family_bruteforce_cap() -> None:
    P = PointSeq.of([(i, i * i) for i in range(13)])
    with pytest.raises(CapExceeded):
        max_crossing_family_bruteforce(P)
    with pytest.raises(CapExceeded):
        max_crossing_family_bruteforce(SQUARE, cap=3)
    with pytest.raises(InputError):
        max_crossing_family_bruteforce(PointSeq.of([(0, 0, 0), (1, 0, 0)]))


def test_segments_cross() -> None:
    assert segments_cross((0, 0), (2, 2), (0, 2), (2, 0)) is True
    assert segments_cross((0, 0), (1, 1), (3, 0), (3, 5)) is False
    # Touching at an endpoint is collinear in one triple, so undecided.
    assert segments_cross((0, 0), (2, 2), (1, 1), (3, 0)) is None
