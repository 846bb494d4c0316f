"""
Avoidance and crossing predicates.

A avoids B when no hyperplane spanned by d points of A meets conv(B). For points in
general position that is the same as B lying strictly on one side of every such
hyperplane, so everything here reduces to orientation signs.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from sympy.solvers.simplex import InfeasibleLPError, UnboundedLPError, linprog

from avoidkit.avoidance.avoid_types import IndexSet, Simplex, check_disjoint, check_simplex
from avoidkit.errors import InputError, InternalError
from avoidkit.geometry.geom_types import PointSeq, from_sympy
from avoidkit.geometry.predicates import hyperplane_coeffs, orient_sign

IntPoint = tuple[int, ...]


def _side(normal: Sequence[int | Fraction], offset: int | Fraction, q: IntPoint) -> int:
    v = sum(a * b for a, b in zip(normal, q, strict=True)) - offset
    return (v > 0) - (v < 0)


def one_side(pts: Sequence[IntPoint], h: Sequence[int], targets: Sequence[int]) -> bool:
    """
    True iff every target point lies strictly on the same side of the hyperplane
    through the points indexed by `h`.
    """
    normal, offset = hyperplane_coeffs([pts[i] for i in h])
    first = 0
    for t in targets:
        s = _side(normal, offset, pts[t])
        if s == 0 or (first and s != first):
            return False
        first = s
    return True


def avoids_points(pts: Sequence[IntPoint], dim: int, A: Sequence[int], B: Sequence[int]) -> bool:
    """
    The avoidance test on already scaled integer points, without validation.
    """
    if len(A) < dim or not B:
        return True
    return all(one_side(pts, h, B) for h in itertools.combinations(A, dim))


def _check_pair(P: PointSeq, A: Sequence[int], B: Sequence[int]) -> None:
    n = len(P)
    for i in (*A, *B):
        if not 0 <= i < n:
            raise InputError(f"Index {i} out of range for {n} points")
    check_disjoint(A, B)


def avoids(P: PointSeq, A: IndexSet, B: IndexSet) -> bool:
    """
    True iff no hyperplane spanned by d points of A meets conv(B). With fewer than d
    points in A no hyperplane is spanned and the answer is true.
    """
    _check_pair(P, A, B)
    return avoids_points(P.int_points, P.dim, A, B)


def mutually_avoiding(P: PointSeq, A: IndexSet, B: IndexSet) -> bool:
    _check_pair(P, A, B)
    pts = P.int_points
    return avoids_points(pts, P.dim, A, B) and avoids_points(pts, P.dim, B, A)


@dataclass(frozen=True)
class SideTable:
    """
    For every d-subset of a point sequence, bitmasks of the points strictly on the
    positive side, the negative side, and on the hyperplane (excluding the subset
    itself). Used by the exhaustive searches.
    """

    dim: int
    n: int
    pos: dict[tuple[int, ...], int]
    neg: dict[tuple[int, ...], int]
    zero: dict[tuple[int, ...], int]

    @classmethod
    def build(cls, P: PointSeq) -> SideTable:
        pts = P.int_points
        n = len(pts)
        pos: dict[tuple[int, ...], int] = {}
        neg: dict[tuple[int, ...], int] = {}
        zero: dict[tuple[int, ...], int] = {}
        for h in itertools.combinations(range(n), P.dim):
            normal, offset = hyperplane_coeffs([pts[i] for i in h])
            p_mask = n_mask = z_mask = 0
            for q in range(n):
                if q in h:
                    continue
                s = _side(normal, offset, pts[q])
                if s > 0:
                    p_mask |= 1 << q
                elif s < 0:
                    n_mask |= 1 << q
                else:
                    z_mask |= 1 << q
            pos[h], neg[h], zero[h] = p_mask, n_mask, z_mask
        return cls(P.dim, n, pos, neg, zero)

    def one_side(self, h: tuple[int, ...], mask: int) -> bool:
        if mask & self.zero[h]:
            return False
        return not (mask & self.pos[h]) or not (mask & self.neg[h])

    def avoids(self, A: Sequence[int], b_mask: int) -> bool:
        if len(A) < self.dim:
            return True
        return all(self.one_side(h, b_mask) for h in itertools.combinations(A, self.dim))


def segments_cross(p1: IntPoint, p2: IntPoint, q1: IntPoint, q2: IntPoint) -> bool | None:
    """
    Proper crossing of two planar segments by orientation signs. Returns None when
    some triple is collinear and the signs alone do not decide.
    """
    s1 = orient_sign((p1, p2, q1))
    s2 = orient_sign((p1, p2, q2))
    s3 = orient_sign((q1, q2, p1))
    s4 = orient_sign((q1, q2, p2))
    if 0 in (s1, s2, s3, s4):
        return None
    return s1 != s2 and s3 != s4


def relative_interiors_meet(U: Sequence[IntPoint], V: Sequence[IntPoint]) -> bool:
    """
    True iff the relative interiors of conv(U) and conv(V) intersect.

    Solved as an exact linear program: the weights are lambda_i = t + x_i and
    mu_j = t + y_j with x, y, t >= 0, and the interiors meet iff the largest
    feasible t is positive.
    """
    d = len(U[0])
    nu, nv = len(U), len(V)
    width = nu + nv + 1
    A_eq: list[list[int]] = []
    b_eq: list[int] = []
    for c in range(d):
        row = [u[c] for u in U] + [-v[c] for v in V]
        row.append(sum(u[c] for u in U) - sum(v[c] for v in V))
        A_eq.append(row)
        b_eq.append(0)
    A_eq.append([1] * nu + [0] * nv + [nu])
    b_eq.append(1)
    A_eq.append([0] * nu + [1] * nv + [nv])
    b_eq.append(1)
    # t <= 1 holds anyway; linprog needs at least one inequality row.
    A_ub = [[0] * (width - 1) + [1]]
    objective = [0] * (width - 1) + [-1]
    try:
        value, x = linprog(objective, A_ub, [1], A_eq, b_eq)
    except InfeasibleLPError:
        return False
    except UnboundedLPError as e:
        raise InternalError(f"Interior LP reported unbounded: {e}") from e
    t = -from_sympy(value)
    if t <= 0:
        return False
    weights = [from_sympy(v) for v in x]
    lam = [t + w for w in weights[:nu]]
    mu = [t + w for w in weights[nu : nu + nv]]
    meet_u = [sum((w * u[c] for w, u in zip(lam, U, strict=True)), Fraction(0)) for c in range(d)]
    meet_v = [sum((w * v[c] for w, v in zip(mu, V, strict=True)), Fraction(0)) for c in range(d)]
    if meet_u != meet_v or sum(lam) != 1 or sum(mu) != 1:
        raise InternalError("Interior LP returned weights that do not meet")
    return True


def strongly_cross(P: PointSeq, s1: Simplex, s2: Simplex) -> bool:
    """
    True iff the simplices share no vertex and their relative interiors intersect.
    """
    s1 = check_simplex(P, s1)
    s2 = check_simplex(P, s2)
    if set(s1) & set(s2):
        return False
    pts = P.int_points
    U = [pts[i] for i in s1]
    V = [pts[i] for i in s2]
    if P.dim == 2:
        crossed = segments_cross(U[0], U[1], V[0], V[1])
        if crossed is not None:
            return crossed
    return relative_interiors_meet(U, V)


def is_crossing_family(P: PointSeq, fam: Sequence[Simplex]) -> bool:
    return all(strongly_cross(P, s, t) for s, t in itertools.combinations(fam, 2))
