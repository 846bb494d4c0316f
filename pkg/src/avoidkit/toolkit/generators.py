"""
Seeded point-set generators. Every coordinate is an exact rational with denominator
at most 2^32, and every output is in general position.
"""

from __future__ import annotations

import itertools
import logging
from enum import Enum
from fractions import Fraction

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from avoidkit.errors import DegenerateInput, SearchFailed
from avoidkit.geometry.geom_types import PointSeq
from avoidkit.geometry.predicates import general_position
from avoidkit.utils.seeded import spawn_rngs

log = logging.getLogger(__name__)

DENOM = 2**32

CIRCLE_STEPS = 2**15

MAX_RETRIES = 1000


class GenKind(str, Enum):
    uniform = "uniform"
    perturbed_grid = "perturbed_grid"
    convex = "convex"
    moment_curve = "moment_curve"


class GenSpec(BaseModel):
    """
    What to generate. `delta` is the perturbation radius for `perturbed_grid`, in
    units of the grid spacing.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: GenKind
    n: int = Field(ge=1)
    dim: int = Field(default=2, ge=1)
    seed: int = Field(default=0, ge=0, lt=2**64)
    delta: Fraction = Fraction(1, 16)

    @model_validator(mode="after")
    def _check_kind(self) -> GenSpec:
        if self.kind == GenKind.perturbed_grid and not 0 < self.delta < Fraction(1, 4):
            raise ValueError(f"delta must be in (0, 1/4) for perturbed_grid, got {self.delta}")
        if self.kind == GenKind.convex:
            if self.dim != 2:
                raise ValueError("convex point sets are planar")
            if self.n > 2 * CIRCLE_STEPS + 1:
                raise ValueError(f"convex point sets hold at most {2 * CIRCLE_STEPS + 1} points")
        return self

    @property
    def label(self) -> str:
        return f"{self.kind.value}(n={self.n}, d={self.dim}, seed={self.seed})"


def _uniform(spec: GenSpec, rng: np.random.Generator) -> list[list[Fraction]]:
    values = rng.integers(0, DENOM, size=(spec.n, spec.dim), dtype=np.uint64)
    return [[Fraction(int(v), DENOM) for v in row] for row in values]


def grid_side(n: int, d: int) -> int:
    """Smallest k with k^d >= n."""
    k = 1
    while k**d < n:
        k += 1
    return k


def _perturbed_grid(spec: GenSpec, rng: np.random.Generator) -> list[list[Fraction]]:
    k = grid_side(spec.n, spec.dim)
    # |r| / 2^32 < delta
    bound = -(-spec.delta.numerator * DENOM // spec.delta.denominator) - 1
    cells = itertools.islice(itertools.product(range(k), repeat=spec.dim), spec.n)
    noise = rng.integers(-bound, bound + 1, size=(spec.n, spec.dim), dtype=np.int64)
    return [
        [c + Fraction(int(r), DENOM) for c, r in zip(cell, row, strict=True)]
        for cell, row in zip(cells, noise, strict=True)
    ]


def _convex(spec: GenSpec, rng: np.random.Generator) -> list[list[Fraction]]:
    # Rational points ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)) on the right half of the unit circle.
    steps = rng.choice(2 * CIRCLE_STEPS + 1, size=spec.n, replace=False)
    rows: list[list[Fraction]] = []
    for s in steps:
        t = Fraction(int(s) - CIRCLE_STEPS, CIRCLE_STEPS)
        rows.append([(1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)])
    return rows


def _moment_curve(spec: GenSpec, rng: np.random.Generator) -> list[list[Fraction]]:
    return [[Fraction(t**e) for e in range(1, spec.dim + 1)] for t in range(1, spec.n + 1)]


_GENERATORS = {
    GenKind.uniform: _uniform,
    GenKind.perturbed_grid: _perturbed_grid,
    GenKind.convex: _convex,
    GenKind.moment_curve: _moment_curve,
}


def generate_points(spec: GenSpec) -> tuple[PointSeq, int]:
    """
    Points for the spec and the number of retries it took to reach general
    position. Attempt i draws from the i-th child of the spec's seed.
    """
    make = _GENERATORS[spec.kind]
    for attempt, rng in enumerate(spawn_rngs(spec.seed, MAX_RETRIES + 1)):
        try:
            P = PointSeq(spec.dim, tuple(tuple(row) for row in make(spec, rng)))
        except DegenerateInput:
            continue
        if general_position(P):
            if attempt:
                log.info("%s reached general position after %s retries", spec.label, attempt)
            return P, attempt
    raise SearchFailed(f"{spec.label} did not reach general position in {MAX_RETRIES} retries")


def generate(spec: GenSpec) -> PointSeq:
    return generate_points(spec)[0]
