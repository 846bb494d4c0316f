from __future__ import annotations

from avoidkit.avoidance.avoid_types import IndexSet, check_disjoint
from avoidkit.errors import InputError, NotSeparable
from avoidkit.geometry.geom_types import Hyperplane, PointSeq
from avoidkit.geometry.separation import max_slack_separator


def separating_hyperplane(P: PointSeq, A: IndexSet, B: IndexSet) -> Hyperplane:
    """
    A hyperplane with A strictly on its negative side and B strictly on its
    positive side.

    Among separators with the largest margin (normal in the unit max-norm ball)
    the one with the smallest L1 normal is taken, scaled to a primitive integer
    normal.
    """
    if not A or not B:
        raise InputError("Both sets to separate must be nonempty")
    check_disjoint(A, B)
    sep = max_slack_separator([P[i] for i in A], [P[i] for i in B])
    if sep is None:
        raise NotSeparable(f"The convex hulls of {list(A)} and {list(B)} intersect")
    return Hyperplane(sep.normal, sep.offset)
