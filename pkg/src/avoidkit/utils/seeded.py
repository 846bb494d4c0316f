from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np


def make_rng(seed: int | np.random.SeedSequence) -> np.random.Generator:
    """Counter-based generator, so streams are reproducible across platforms."""
    return np.random.Generator(np.random.Philox(seed))


def spawn_rngs(seed: int, count: int) -> list[np.random.Generator]:
    """
    Independent generators derived from one seed, one per trial.
    """
    children = np.random.SeedSequence(seed).spawn(count)
    return [make_rng(child) for child in children]


def transversal_count(parts: Sequence[Sequence[int]]) -> int:
    return math.prod(len(p) for p in parts)


def random_transversal(rng: np.random.Generator, parts: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(part[int(rng.integers(len(part)))] for part in parts)
