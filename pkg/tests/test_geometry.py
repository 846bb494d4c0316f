from fractions import Fraction

import pytest

from avoidkit.errors import DegenerateInput, InputError, NoIntersection
from avoidkit.geometry.flats import hyperplane_through, line_hyperplane_intersection
from avoidkit.geometry.geom_types import Orientation, PointSeq, as_point
from avoidkit.geometry.hull import convex_hull_2d
from avoidkit.geometry.predicates import orient
from avoidkit.geometry.separation import max_slack_separator


def test_hyperplane_through_matches_orient() -> None:
    h_pts = [as_point((0, 0, 0)), as_point((1, 0, 0)), as_point((0, 1, 0))]
    h = hyperplane_through(h_pts)
    for q in [(0, 0, 1), (0, 0, -2), (3, 4, 0)]:
        assert h.side(as_point(q)) == orient([*h_pts, as_point(q)])
    assert h.contains(as_point((5, 7, 0)))

    with pytest.raises(DegenerateInput):
        hyperplane_through([as_point((0, 0)), as_point((0, 0))])
    with pytest.raises(InputError):
        hyperplane_through([as_point((0, 0))])


def test_line_hyperplane_intersection() -> None:
    h = hyperplane_through([as_point((0, 0)), as_point((1, 0))])
    x = line_hyperplane_intersection(as_point((1, 1)), as_point((3, -1)), h)
    assert x == (Fraction(2), Fraction(0))

    x = line_hyperplane_intersection(as_point((0, 1)), as_point((1, 4)), h)
    assert x == (Fraction(-1, 3), Fraction(0))

    with pytest.raises(NoIntersection):
        line_hyperplane_intersection(as_point((0, 1)), as_point((5, 1)), h)
    with pytest.raises(DegenerateInput):
        line_hyperplane_intersection(as_point((0, 0)), as_point((5, 0)), h)
    with pytest.raises(DegenerateInput):
        line_hyperplane_intersection(as_point((1, 1)), as_point((1, 1)), h)


def test_convex_hull_square_with_interior() -> None:
    P = PointSeq.of([(1, 1), (0, 0), (2, 0), (2, 2), (0, 2), (1, 0)])
    assert convex_hull_2d(P) == [1, 2, 3, 4]


def test_convex_hull_small_and_collinear() -> None:
    assert convex_hull_2d(PointSeq.of([(3, 3)])) == [0]
    assert convex_hull_2d(PointSeq.of([(2, 0), (0, 0), (1, 0)])) == [1, 0]
    with pytest.raises(InputError):
        convex_hull_2d(PointSeq.of([(0, 0, 0), (1, 0, 0)]))


def test_max_slack_separator_exact_margin() -> None:
    # Unit-distance points: the best normal in the max-norm ball is (1, 0), margin 1/2.
    sep = max_slack_separator([(0, 0)], [(1, 0)])
    assert sep is not None
    assert sep.slack == Fraction(1, 2)
    assert sep.normal == (1, 0)
    assert sep.offset == Fraction(1, 2)


def test_max_slack_separator_diagonal() -> None:
    sep = max_slack_separator([(0, 0)], [(1, 1)])
    assert sep is not None
    assert sep.slack == 1
    assert sep.normal == (1, 1)
    assert sep.offset == 1


def test_max_slack_separator_raw_solution() -> None:
    A = [(0, 0, 0), (1, 0, 0), (0, 1, 0)]
    B = [(0, 0, 3), (1, 1, 4)]
    sep = max_slack_separator(A, B, canonical=False)
    assert sep is not None
    assert sep.slack > 0
    assert sep.separates(A, B)
    assert not sep.separates(B, A)


def test_max_slack_separator_points() -> None:
    sep = max_slack_separator([(0, 0)], [(2, 0)])
    assert sep is not None
    assert sep.normal == (1, 0)
    assert sep.offset == 1


def test_max_slack_separator_sides() -> None:
    A = [(0, 0), (1, 3), (2, 1)]
    B = [(5, 5), (6, 2), (7, 7)]
    sep = max_slack_separator(A, B)
    assert sep is not None
    value = lambda x: sum(a * b for a, b in zip(sep.normal, x, strict=True)) - sep.offset
    assert all(value(a) < 0 for a in A)
    assert all(value(b) > 0 for b in B)
    assert all(c.denominator == 1 for c in sep.normal)


def test_max_slack_separator_overlap() -> None:
    assert max_slack_separator([(0, 0), (2, 2)], [(0, 2), (2, 0)]) is None
    assert max_slack_separator([(0, 0), (2, 0)], [(1, 0)]) is None
    with pytest.raises(InputError):
        max_slack_separator([], [(1, 0)])


def test_orientation_of_sign() -> None:
    assert Orientation.of_sign(Fraction(-1, 7)) == Orientation.NEGATIVE
    assert Orientation.of_sign(0) == Orientation.ZERO
