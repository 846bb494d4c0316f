"""
Maximum-margin strict separation of two finite point sets, solved as exact linear
programs with sympy's simplex.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from sympy.solvers.simplex import InfeasibleLPError, UnboundedLPError, linprog

from avoidkit.errors import InputError, InternalError
from avoidkit.geometry.geom_types import from_sympy, to_sympy

Coords = Sequence[int | Fraction]


@dataclass(frozen=True)
class Separation:
    """
    normal . a < offset for every a in the first set and normal . b > offset for
    every b in the second. `slack` is the margin reached with the normal scaled to
    max-norm at most 1.
    """

    normal: tuple[Fraction, ...]
    offset: Fraction
    slack: Fraction

    def separates(self, A: Sequence[Coords], B: Sequence[Coords]) -> bool:
        def value(x: Coords) -> Fraction:
            return sum((n * c for n, c in zip(self.normal, x, strict=True)), Fraction(0))

        return all(value(a) < self.offset for a in A) and all(value(b) > self.offset for b in B)


def _primitive(normal: Sequence[Fraction], offset: Fraction) -> tuple[tuple[Fraction, ...], Fraction]:
    scale = math.lcm(1, *(c.denominator for c in normal))
    ints = [int(c * scale) for c in normal]
    g = math.gcd(*ints)
    return tuple(Fraction(c // g) for c in ints), offset * scale / g


def _solve(
    objective: Sequence[int], rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> tuple[Fraction, tuple[Fraction, ...]] | None:
    """Minimum of objective . x over rows . x <= rhs, x >= 0, or None if infeasible."""
    try:
        value, x = linprog(
            list(objective),
            [[to_sympy(v) for v in row] for row in rows],
            [to_sympy(v) for v in rhs],
        )
    except InfeasibleLPError:
        return None
    return from_sympy(value), tuple(from_sympy(v) for v in x)


def max_slack_separator(
    A: Sequence[Coords], B: Sequence[Coords], *, canonical: bool = True
) -> Separation | None:
    """
    A hyperplane strictly separating the points of A from those of B, or None if
    their convex hulls meet.

    The normal is w = p - q with p, q >= 0 and p_j + q_j <= 1, the offset is
    cp - cq, and the slack s is maximized. With `canonical`, a second solve keeps the
    slack at its maximum and minimizes the L1 norm of w, and the result is scaled
    to a primitive integer normal.
    """
    if not A or not B:
        raise InputError("Separation needs two nonempty point sets")
    d = len(A[0])
    if any(len(x) != d for x in (*A, *B)):
        raise InputError("Points to separate have different dimensions")

    width = 2 * d + 3
    s_col = width - 1
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for a in A:
        rows.append([*map(Fraction, a), *(-Fraction(x) for x in a), Fraction(-1), Fraction(1), Fraction(1)])
        rhs.append(Fraction(0))
    for b in B:
        rows.append([*(-Fraction(x) for x in b), *map(Fraction, b), Fraction(1), Fraction(-1), Fraction(1)])
        rhs.append(Fraction(0))
    for j in range(d):
        row = [Fraction(0)] * width
        row[j] = row[d + j] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))
    bound = [Fraction(0)] * width
    bound[s_col] = Fraction(1)
    rows.append(bound)
    rhs.append(Fraction(1))

    # Every variable is bounded above by the rows, so only infeasibility can occur.
    objective = [0] * width
    objective[s_col] = -1
    try:
        first = _solve(objective, rows, rhs)
    except UnboundedLPError as e:
        raise InternalError(f"Separation LP reported unbounded: {e}") from e
    if first is None or -first[0] <= 0:
        return None
    slack = -first[0]
    solution = first[1]

    if canonical:
        keep = [Fraction(0)] * width
        keep[s_col] = Fraction(-1)
        l1 = [1] * (2 * d) + [0] * 3
        try:
            second = _solve(l1, [*rows, keep], [*rhs, -slack])
        except UnboundedLPError as e:
            raise InternalError(f"Separation LP reported unbounded: {e}") from e
        if second is not None:
            solution = second[1]

    normal = tuple(solution[j] - solution[d + j] for j in range(d))
    offset = solution[2 * d] - solution[2 * d + 1]
    if canonical:
        normal, offset = _primitive(normal, offset)
    sep = Separation(normal, offset, slack)
    if not sep.separates(A, B):
        raise InternalError(f"LP solution does not separate the sets: {sep}")
    return sep
