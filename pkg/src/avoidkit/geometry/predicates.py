"""
Exact orientation predicates. Nothing here uses floating point: signs come from
fraction-free integer elimination or closed-form integer expressions.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import TypeAlias

from avoidkit.errors import DegenerateInput, InputError
from avoidkit.geometry.geom_types import Orientation, Point, PointSeq

Scalar: TypeAlias = int | Fraction
Coords: TypeAlias = Sequence[Scalar]


def _integer_rows(rows: Sequence[Coords]) -> tuple[list[list[int]], int]:
    """
    Scale each row by the lcm of its denominators. Returns the integer rows and the
    product of the scale factors.
    """
    int_rows: list[list[int]] = []
    total = 1
    for row in rows:
        scale = math.lcm(1, *(Fraction(v).denominator for v in row))
        int_rows.append([int(v * scale) for v in row])
        total *= scale
    return int_rows, total


def _bareiss(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination. Mutates `m` and returns its determinant."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def determinant(rows: Sequence[Coords]) -> Fraction:
    """
    Exact determinant of a square matrix by fraction-free (Bareiss) elimination.
    """
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise InputError("Determinant of a non-square matrix")
    int_rows, scale = _integer_rows(rows)
    return Fraction(_bareiss(int_rows), scale)


def det_sign(rows: Sequence[Coords]) -> int:
    det = determinant(rows)
    return (det > 0) - (det < 0)


def det_cofactor(rows: Sequence[Coords]) -> Fraction:
    """
    Determinant by Laplace expansion along the first row. Exponential, used as an
    independent oracle in tests.
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = rows[0][j] * det_cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total


def orientation_matrix(points: Sequence[Coords]) -> list[list[Scalar]]:
    """
    The (d+1)x(d+1) matrix with a first row of ones and column j holding the
    coordinates of point j.
    """
    d = len(points[0])
    return [[1] * len(points), *([p[i] for p in points] for i in range(d))]


def orient_sign(points: Sequence[Coords]) -> int:
    """
    Sign of the orientation determinant for d+1 points in R^d, no validation.
    Works on int or Fraction coordinates.
    """
    p0 = points[0]
    d = len(p0)
    if d == 2:
        (x0, y0), (x1, y1), (x2, y2) = p0, points[1], points[2]
        v = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)
        return (v > 0) - (v < 0)
    if d == 3:
        ax, ay, az = (points[1][i] - p0[i] for i in range(3))
        bx, by, bz = (points[2][i] - p0[i] for i in range(3))
        cx, cy, cz = (points[3][i] - p0[i] for i in range(3))
        v = ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx)
        return (v > 0) - (v < 0)
    return det_sign([[p[i] - p0[i] for i in range(d)] for p in points[1:]])


def _check_tuple(points: Sequence[Point]) -> int:
    if not points:
        raise InputError("Orientation of an empty tuple")
    d = len(points[0])
    if any(len(p) != d for p in points):
        raise InputError("Points in an orientation tuple have different dimensions")
    if len(points) != d + 1:
        raise InputError(f"Orientation in R^{d} needs {d + 1} points, got {len(points)}")
    return d


def orient(points: Sequence[Point]) -> Orientation:
    """
    Orientation of d+1 points in R^d: the sign of the determinant with a first row of
    ones and the point coordinates as columns.
    """
    _check_tuple(points)
    return Orientation(orient_sign(points))


def hyperplane_coeffs(points: Sequence[Coords]) -> tuple[list[Scalar], Scalar]:
    """
    Normal and offset of the hyperplane through d points in R^d, oriented so that
    normal . q - offset has the sign of orient(points + [q]). The normal is zero iff
    the points are affinely dependent.
    """
    p0 = points[0]
    d = len(p0)
    rows = [[p[i] - p0[i] for i in range(d)] for p in points[1:]]
    if d == 1:
        normal: list[Scalar] = [1]
    elif d == 2:
        dx, dy = rows[0]
        normal = [-dy, dx]
    elif d == 3:
        (ax, ay, az), (bx, by, bz) = rows
        normal = [ay * bz - az * by, az * bx - ax * bz, ax * by - ay * bx]
    else:
        normal = []
        for c in range(d):
            minor = [[row[j] for j in range(d) if j != c] for row in rows]
            cof = determinant(minor)
            normal.append(cof if (d - 1 + c) % 2 == 0 else -cof)
    offset = sum((a * b for a, b in zip(normal, p0, strict=True)), 0)
    return normal, offset


def affine_rank(points: Sequence[Coords]) -> int:
    """Dimension of the affine hull of the points (-1 for no points)."""
    if not points:
        return -1
    p0 = points[0]
    rows = [[Fraction(p[i] - p0[i]) for i in range(len(p0))] for p in points[1:]]
    rank = 0
    cols = len(p0)
    for c in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(rank + 1, len(rows)):
            factor = rows[r][c] / rows[rank][c]
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank], strict=True)]
        rank += 1
    return rank


def _canonical_direction(dx: int, dy: int) -> tuple[int, int]:
    g = math.gcd(dx, dy)
    dx, dy = dx // g, dy // g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx, dy


def general_position(P: PointSeq) -> bool:
    """
    True iff no d+1 points of P lie on a common hyperplane.

    In the plane this hashes the primitive direction from each point to every later
    point, so a collinear triple shows up as a repeated direction. In higher
    dimensions it checks every (d+1)-subset.
    """
    pts = P.int_points
    d = P.dim
    if len(pts) <= d:
        return True
    if d == 2:
        for i, (xi, yi) in enumerate(pts):
            seen: set[tuple[int, int]] = set()
            for xj, yj in pts[i + 1 :]:
                key = _canonical_direction(xj - xi, yj - yi)
                if key in seen:
                    return False
                seen.add(key)
        return True
    return all(orient_sign(combo) != 0 for combo in itertools.combinations(pts, d + 1))


def first_degenerate_tuple(P: PointSeq) -> tuple[int, ...] | None:
    """Lexicographically first (d+1)-tuple of indices with zero orientation."""
    pts = P.int_points
    for combo in itertools.combinations(range(len(pts)), P.dim + 1):
        if orient_sign([pts[i] for i in combo]) == 0:
            return combo
    return None


def check_general_position(P: PointSeq) -> None:
    if general_position(P):
        return
    bad = first_degenerate_tuple(P)
    raise DegenerateInput(f"Points {list(bad or ())} lie on a common hyperplane; input must be in general position")


def side_counts(h_points: Sequence[Point], Q: Iterable[Point]) -> tuple[int, int, int]:
    """
    Counts of q in Q with orient(h_points + [q]) positive, negative, and zero.
    """
    h_points = list(h_points)
    if not h_points:
        raise InputError("side_counts needs d points spanning a hyperplane")
    d = len(h_points[0])
    if len(h_points) != d or any(len(p) != d for p in h_points):
        raise InputError(f"A hyperplane in R^{d} is spanned by exactly {d} points of dimension {d}")
    normal, offset = hyperplane_coeffs(h_points)
    if not any(normal):
        raise DegenerateInput("Points defining the hyperplane are affinely dependent")
    pos = neg = zero = 0
    for q in Q:
        if len(q) != d:
            raise InputError(f"Point {q} does not have dimension {d}")
        v = sum((a * b for a, b in zip(normal, q, strict=True)), Fraction(0)) - offset
        if v > 0:
            pos += 1
        elif v < 0:
            neg += 1
        else:
            zero += 1
    return pos, neg, zero
