"""
The planar positive-fraction construction: find a mutually avoiding pair, thin it
to a support, carve wedge regions from the support, and keep the densest regions as
the parts. Every transversal of the parts should then be mutually avoiding, which
the verifiers here check exhaustively or by seeded sampling.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from avoidkit.avoidance.avoid_predicates import avoids_points, segments_cross
from avoidkit.avoidance.avoid_search import find_avoiding_heuristic
from avoidkit.avoidance.avoid_types import AvoidingPair
from avoidkit.config.settings import get_settings
from avoidkit.errors import InputError, SearchFailed
from avoidkit.fractional.frac_types import CheckVerdict, FractionalFamily, RegionFamily, SupportPair
from avoidkit.fractional.regions import build_regions, select_dense_regions
from avoidkit.fractional.support import support_of
from avoidkit.geometry.geom_types import PointSeq
from avoidkit.utils.parallel import parallel_map
from avoidkit.utils.seeded import random_transversal, spawn_rngs, transversal_count

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class FractionalRun:
    """Every intermediate of a pipeline run, for reports and diagnostics."""

    pair: AvoidingPair
    support: SupportPair
    regions: RegionFamily
    selected_a: list[int]
    selected_b: list[int]
    family: FractionalFamily


def run_fractional_pipeline(P: PointSeq, k: int, m: int) -> FractionalRun:
    if P.dim != 2:
        raise InputError(f"The fractional pipeline is planar, got dimension {P.dim}")
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    if m % 4 != 1:
        raise InputError(f"Avoiding-pair size m must be 1 mod 4, got {m}")
    if (m - 1) // 4 < k:
        raise InputError(f"m={m} gives {(m - 1) // 4} regions per side, fewer than k={k}; use m >= {4 * k + 1}")

    pair = find_avoiding_heuristic(P, m)
    if pair.min_size < m:
        raise SearchFailed(
            f"No mutually avoiding pair of size {m} found (best {pair.min_size}); try a smaller m"
        )
    pair = pair.trimmed(m)
    support = support_of(P, pair)
    regions = build_regions(P, support)
    sel_a, sel_b = select_dense_regions(regions, k)

    a_parts = tuple(regions.members_a[i] for i in sel_a)
    b_parts = tuple(regions.members_b[i] for i in sel_b)
    if not all(a_parts) or not all(b_parts):
        raise SearchFailed(
            f"A selected region is empty (alpha={regions.counts_a}, beta={regions.counts_b}); "
            "try a larger point set or a different m"
        )
    family = FractionalFamily(a_parts, b_parts)
    log.info("Fractional family with part sizes %s", [len(p) for p in family.parts])
    return FractionalRun(pair, support, regions, sel_a, sel_b, family)


def fractional_family(P: PointSeq, k: int, m: int) -> FractionalFamily:
    return run_fractional_pipeline(P, k, m).family


def check_transversals(
    parts: Sequence[Sequence[int]],
    accept: Callable[[tuple[int, ...]], bool],
    *,
    trials: int | None = None,
    exhaustive_cap: int | None = None,
    seed: int | None = None,
    exhaustive: bool = False,
) -> CheckVerdict:
    """
    Apply `accept` to every transversal of the parts if there are at most
    `exhaustive_cap` of them (or `exhaustive` is set), else to `trials` transversals
    drawn with independent sub-seeds of `seed`.
    """
    settings = get_settings()
    trials = trials if trials is not None else settings.trials
    exhaustive_cap = exhaustive_cap if exhaustive_cap is not None else settings.exhaustive_cap
    seed = seed if seed is not None else settings.seed

    total = transversal_count(parts)
    if exhaustive or total <= exhaustive_cap:
        checked = 0
        for t in itertools.product(*parts):
            checked += 1
            if not accept(t):
                return CheckVerdict(False, "exhaustive", checked, counterexample=t)
        return CheckVerdict(True, "exhaustive", checked)

    samples = [random_transversal(rng, parts) for rng in spawn_rngs(seed, trials)]
    results = parallel_map(accept, samples)
    for i, ok in enumerate(results):
        if not ok:
            return CheckVerdict(False, "sampling", i + 1, seed=seed, counterexample=samples[i])
    return CheckVerdict(True, "sampling", trials, seed=seed)


def check_fractional(
    P: PointSeq,
    fam: FractionalFamily,
    *,
    trials: int | None = None,
    exhaustive_cap: int | None = None,
    seed: int | None = None,
    exhaustive: bool = False,
) -> CheckVerdict:
    """
    Check that transversals (a_1..a_k, b_1..b_k) are mutually avoiding.
    """
    pts = P.int_points
    d = P.dim
    k = fam.k

    def accept(t: tuple[int, ...]) -> bool:
        a, b = t[:k], t[k:]
        return avoids_points(pts, d, a, b) and avoids_points(pts, d, b, a)

    return check_transversals(
        fam.parts, accept, trials=trials, exhaustive_cap=exhaustive_cap, seed=seed, exhaustive=exhaustive
    )


def verify_fractional(
    P: PointSeq,
    fam: FractionalFamily,
    trials: int | None = None,
    exhaustive_cap: int | None = None,
    *,
    seed: int | None = None,
) -> bool:
    return check_fractional(P, fam, trials=trials, exhaustive_cap=exhaustive_cap, seed=seed).ok


def check_crossing_variant(
    P: PointSeq,
    fam: FractionalFamily,
    *,
    trials: int | None = None,
    exhaustive_cap: int | None = None,
    seed: int | None = None,
    exhaustive: bool = False,
) -> CheckVerdict:
    """
    Check that segment(a_i, b_{k+1-i}) crosses segment(a_{k+1-i}, b_i) for every
    i, over transversals of the family. The case i = k+1-i is a single segment and
    is skipped.
    """
    if P.dim != 2:
        raise InputError(f"The crossing variant is planar, got dimension {P.dim}")
    pts = P.int_points
    k = fam.k

    def accept(t: tuple[int, ...]) -> bool:
        a, b = t[:k], t[k:]
        for i in range(k):
            j = k - 1 - i
            if i >= j:
                continue
            if not segments_cross(pts[a[i]], pts[b[j]], pts[a[j]], pts[b[i]]):
                return False
        return True

    return check_transversals(
        fam.parts, accept, trials=trials, exhaustive_cap=exhaustive_cap, seed=seed, exhaustive=exhaustive
    )


def verify_crossing_variant(
    P: PointSeq, fam: FractionalFamily, trials: int | None = None, *, seed: int | None = None
) -> bool:
    return check_crossing_variant(P, fam, trials=trials, seed=seed).ok
