"""
Same-type transversals: every choice of one point per part yields the same order
type. That holds iff each (d+1)-tuple of parts has a constant orientation over all
its transversals, which is what is checked here, tuple by tuple.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from avoidkit.avoidance.avoid_types import IndexSet, check_disjoint
from avoidkit.config.settings import get_settings
from avoidkit.errors import InputError
from avoidkit.geometry.geom_types import PointSeq
from avoidkit.geometry.predicates import orient_sign
from avoidkit.geometry.separation import max_slack_separator
from avoidkit.utils.seeded import random_transversal, spawn_rngs

log = logging.getLogger(__name__)


class CheckMethod(str, Enum):
    exhaustive = "exhaustive"
    separation = "separation"
    sampling = "sampling"

    @property
    def is_proof(self) -> bool:
        return self != CheckMethod.sampling


@dataclass(frozen=True)
class SameTypeVerdict:
    same_type: bool
    method: CheckMethod
    checked: int
    counterexample: tuple[int, ...] | None = None


def _tuple_is_constant(pts: Sequence[tuple[int, ...]], parts: Sequence[Sequence[int]]) -> tuple[bool, int, tuple[int, ...] | None]:
    first = 0
    checked = 0
    for t in itertools.product(*parts):
        checked += 1
        s = orient_sign([pts[i] for i in t])
        if s == 0 or (first and s != first):
            return False, checked, t
        first = s
    return True, checked, None


def tuple_separated(pts: Sequence[tuple[int, ...]], parts: Sequence[Sequence[int]]) -> bool:
    """
    True if for every split of the parts into two groups the two unions have
    strictly separable hulls. Then no hyperplane meets all the hulls (a common
    hyperplane would give a Radon partition of the transversal), so orientation
    is constant on transversals.
    """
    r = len(parts)
    for mask in range(1, 2 ** (r - 1)):
        left = [pts[i] for j in range(r) if mask >> j & 1 for i in parts[j]]
        right = [pts[i] for j in range(r) if not mask >> j & 1 for i in parts[j]]
        if max_slack_separator(left, right, canonical=False) is None:
            return False
    return True


def check_same_type(
    P: PointSeq,
    parts: Sequence[IndexSet],
    *,
    exhaustive_cap: int | None = None,
    trials: int | None = None,
    seed: int | None = None,
    allow_sampling: bool = True,
) -> SameTypeVerdict:
    """
    Decide whether the parts have same-type transversals: exhaustively when the
    number of orientation evaluations is within `exhaustive_cap`, otherwise by the
    separation condition, falling back to seeded sampling (a falsifier, not a proof)
    when the separation condition does not hold and `allow_sampling` is set.
    """
    for part in parts:
        if not part:
            raise InputError("Parts must be nonempty")
        for i in part:
            if not 0 <= i < len(P):
                raise InputError(f"Index {i} out of range for {len(P)} points")
    check_disjoint(*parts)

    settings = get_settings()
    exhaustive_cap = exhaustive_cap if exhaustive_cap is not None else settings.exhaustive_cap
    trials = trials if trials is not None else settings.trials
    seed = seed if seed is not None else settings.seed

    r = P.dim + 1
    if len(parts) < r:
        return SameTypeVerdict(True, CheckMethod.exhaustive, 0)

    pts = P.int_points
    tuples = list(itertools.combinations(range(len(parts)), r))
    work = sum(math.prod(len(parts[j]) for j in t) for t in tuples)

    if work <= exhaustive_cap:
        total = 0
        for t in tuples:
            ok, checked, bad = _tuple_is_constant(pts, [parts[j] for j in t])
            total += checked
            if not ok:
                return SameTypeVerdict(False, CheckMethod.exhaustive, total, bad)
        return SameTypeVerdict(True, CheckMethod.exhaustive, total)

    unresolved = [t for t in tuples if not tuple_separated(pts, [parts[j] for j in t])]
    if not unresolved:
        return SameTypeVerdict(True, CheckMethod.separation, len(tuples))
    if not allow_sampling:
        log.debug("%s part tuples not separated; sampling not allowed", len(unresolved))
        return SameTypeVerdict(False, CheckMethod.separation, len(tuples))

    checked = 0
    for t, rng in zip(unresolved, spawn_rngs(seed, len(unresolved)), strict=True):
        tparts = [parts[j] for j in t]
        first = 0
        for _ in range(trials):
            sample = random_transversal(rng, tparts)
            checked += 1
            s = orient_sign([pts[i] for i in sample])
            if s == 0 or (first and s != first):
                return SameTypeVerdict(False, CheckMethod.sampling, checked, sample)
            first = s
    return SameTypeVerdict(True, CheckMethod.sampling, checked)


def same_type_transversals(P: PointSeq, parts: Sequence[IndexSet]) -> bool:
    return check_same_type(P, parts).same_type
