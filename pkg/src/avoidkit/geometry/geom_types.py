from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import cached_property
from typing import TypeAlias

import sympy

from avoidkit.errors import DegenerateInput, InputError

Rational: TypeAlias = Fraction
"""Exact rational number, always kept in lowest terms with a positive denominator."""

Point: TypeAlias = tuple[Fraction, ...]
"""A point in R^d as a tuple of exact coordinates."""

Number: TypeAlias = int | Fraction | str
"""Values accepted as coordinates: integers, fractions, or strings like "3/4"."""


def as_rational(value: Number) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError(f"Coordinates must be exact (int, Fraction, or 'p/q'), got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"Not a rational number: {value!r}") from e


def as_point(coords: Iterable[Number]) -> Point:
    return tuple(as_rational(c) for c in coords)


def to_sympy(value: int | Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value: object) -> Fraction:
    """
    Exact value of a sympy rational (or a plain int, which sympy's solvers also return).
    """
    r = sympy.Rational(value)
    return Fraction(int(r.p), int(r.q))


class Orientation(IntEnum):
    """
    Sign of the orientation determinant of a (d+1)-tuple.
    """

    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @classmethod
    def of_sign(cls, value: int | Fraction) -> Orientation:
        return cls.POSITIVE if value > 0 else cls.NEGATIVE if value < 0 else cls.ZERO


@dataclass(frozen=True)
class PointSeq:
    """
    An ordered sequence of distinct points in R^dim with exact coordinates.
    """

    dim: int
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise InputError(f"Dimension must be positive, got {self.dim}")
        for i, p in enumerate(self.points):
            if len(p) != self.dim:
                raise InputError(f"Point {i} has {len(p)} coordinates, expected {self.dim}")
        if len(set(self.points)) != len(self.points):
            seen: dict[Point, int] = {}
            for i, p in enumerate(self.points):
                if p in seen:
                    raise DegenerateInput(f"Points {seen[p]} and {i} coincide")
                seen[p] = i

    @classmethod
    def of(cls, rows: Iterable[Iterable[Number]], dim: int | None = None) -> PointSeq:
        points = tuple(as_point(row) for row in rows)
        if dim is None:
            if not points:
                raise InputError("Cannot infer the dimension of an empty point sequence")
            dim = len(points[0])
        return cls(dim, points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, index: int) -> Point:
        return self.points[index]

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    @cached_property
    def scale(self) -> int:
        """Common denominator of all coordinates."""
        return math.lcm(1, *(c.denominator for p in self.points for c in p))

    @cached_property
    def int_points(self) -> tuple[tuple[int, ...], ...]:
        """
        All points multiplied by the common denominator. A positive uniform scaling,
        so every orientation sign is the same as for the original points.
        """
        s = self.scale
        return tuple(tuple(c.numerator * (s // c.denominator) for c in p) for p in self.points)

    def subset(self, indices: Sequence[int]) -> PointSeq:
        return PointSeq(self.dim, tuple(self.points[i] for i in indices))

    def centroid(self, indices: Sequence[int]) -> Point:
        if not indices:
            raise InputError("Centroid of an empty index set")
        n = len(indices)
        return tuple(sum((self.points[i][j] for i in indices), Fraction(0)) / n for j in range(self.dim))


@dataclass(frozen=True)
class Hyperplane:
    """
    The hyperplane {x : normal . x = offset}. Its positive side is where
    normal . x > offset.
    """

    normal: tuple[Fraction, ...]
    offset: Fraction

    def __post_init__(self) -> None:
        if not any(self.normal):
            raise DegenerateInput("Hyperplane normal is the zero vector")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def evaluate(self, x: Sequence[Fraction | int]) -> Fraction:
        return sum((a * b for a, b in zip(self.normal, x, strict=True)), Fraction(0)) - self.offset

    def side(self, x: Sequence[Fraction | int]) -> Orientation:
        return Orientation.of_sign(self.evaluate(x))

    def contains(self, x: Sequence[Fraction | int]) -> bool:
        return self.evaluate(x) == 0
