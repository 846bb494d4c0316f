"""
Crossing families of (d-1)-simplices in R^d by recursion on dimension.

Find a mutually avoiding pair A, B and a hyperplane separating them. Project B
from one apex of A onto the hyperplane, solve the (d-1)-dimensional problem on the
images, and lift each resulting (d-2)-simplex of B to a (d-1)-simplex by adding a
distinct apex from A. When the images give fewer than two simplices the sides
are swapped, and then a wider pair is tried. In the plane the family comes straight
from the avoiding pair.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass

from avoidkit.avoidance.avoid_predicates import is_crossing_family
from avoidkit.avoidance.avoid_search import find_avoiding_heuristic, max_avoiding_bruteforce
from avoidkit.avoidance.avoid_types import AvoidingPair, CrossingFamily, Simplex
from avoidkit.avoidance.crossing import crossing_family_from_avoiding
from avoidkit.config.settings import get_settings
from avoidkit.errors import DegenerateInput, InputError, VerificationFailed
from avoidkit.geometry.geom_types import Hyperplane, PointSeq
from avoidkit.geometry.predicates import affine_rank
from avoidkit.highdim.avoid_rd import max_avoiding_bruteforce_rd
from avoidkit.highdim.projection import ProjectionFrame, project_through
from avoidkit.highdim.separation import separating_hyperplane

log = logging.getLogger(__name__)


def crossing_bound(n: int, d: int) -> float:
    """
    Growth rate of the guaranteed crossing family size, without constants: sqrt(n)
    in the plane, n^(1/(2 prod_{i=3..d} (i^2 - i + 1))) above. Reported only.
    """
    if d < 2:
        raise InputError(f"Dimension must be at least 2, got {d}")
    exponent_denominator = 2 * math.prod(i * i - i + 1 for i in range(3, d + 1))
    return n ** (1 / exponent_denominator)


def heuristic_target(n: int) -> int:
    return max(2, math.isqrt(n))


def find_pair(P: PointSeq, target: int | None = None) -> AvoidingPair:
    """
    The exact search under the size cap, else the sweep heuristic aiming at
    `target` (default `heuristic_target(n)`). Both sides are trimmed to the same size.
    """
    settings = get_settings()
    n = len(P)
    if P.dim == 2 and n <= settings.avoid_cap:
        pair = max_avoiding_bruteforce(P)
    elif P.dim > 2 and n <= settings.rd_avoid_cap:
        pair = max_avoiding_bruteforce_rd(P)
    else:
        pair = find_avoiding_heuristic(P, target or heuristic_target(n))
    return pair.trimmed(pair.min_size)


def candidate_pairs(P: PointSeq) -> Iterator[AvoidingPair]:
    """
    Pairs to recurse on, best guess first: the default pair, the same pair with the
    sides swapped, then (when the search is heuristic) the widest pair the sweep
    finds, both ways round. Swapping changes which side is projected.
    """
    # Five points in the plane always hold two crossing segments; in general the
    # images need 2d - 1 points before the nested run can return two simplices.
    pair = find_pair(P, target=max(heuristic_target(len(P)), 2 * P.dim - 1))
    yield pair
    yield AvoidingPair(pair.b, pair.a, pair.verified)
    if len(P) <= get_settings().rd_avoid_cap:
        return
    wide = find_pair(P, target=len(P) // 2)
    if wide.min_size > pair.min_size:
        log.info("Retrying with a wider avoiding pair of size %s", wide.min_size)
        yield wide
        yield AvoidingPair(wide.b, wide.a, wide.verified)


@dataclass(frozen=True)
class CrossingRdRun:
    pair: AvoidingPair | None
    plane: Hyperplane | None
    frames: tuple[ProjectionFrame, ...]
    family: CrossingFamily
    bound: float
    fallback: bool = False


def lift(P: PointSeq, pair: AvoidingPair, frame: ProjectionFrame, base: CrossingFamily) -> tuple[Simplex, ...] | None:
    """
    Each base simplex on the images gets its sources plus one apex of A. Apexes are
    taken in (first coordinate, index) order, then reversed; the first assignment
    that crosses pairwise is returned.
    """
    apexes = sorted(pair.a, key=lambda i: (P[i][0], i))
    simplices = base.simplices
    if len(simplices) > len(apexes):
        log.warning("Base family of %s exceeds the %s apexes; keeping %s", len(simplices), len(apexes), len(apexes))
        simplices = simplices[: len(apexes)]
    k = len(simplices)
    for order in (apexes[:k], apexes[::-1][:k]):
        lifted = tuple(
            tuple(sorted((apex, *(frame.sources[j] for j in simplex))))
            for apex, simplex in zip(order, simplices, strict=True)
        )
        if is_crossing_family(P, lifted):
            return lifted
    return None


def run_crossing_rd(P: PointSeq) -> CrossingRdRun:
    d = P.dim
    n = len(P)
    if d < 2:
        raise InputError(f"Dimension must be at least 2, got {d}")
    if n < d:
        raise InputError(f"Need at least {d} points for a simplex in R^{d}, got {n}")
    bound = crossing_bound(n, d)

    def single(pair: AvoidingPair | None) -> CrossingRdRun:
        size = pair.min_size if pair else 0
        log.warning(
            "No avoiding pair of size 2 among %s points in R^%s (best size %s); returning a single simplex",
            n,
            d,
            size,
        )
        family = CrossingFamily((tuple(range(d)),), verified=True)
        return CrossingRdRun(pair, None, (), family, bound, fallback=True)

    if n < 2 * d:
        return single(None)
    rank = affine_rank(P.int_points)
    if rank < d:
        raise DegenerateInput(f"The {n} points span only a {rank}-flat in R^{d}")

    if d == 2:
        pair = find_pair(P)
        if pair.min_size < 2:
            return single(pair)
        family = crossing_family_from_avoiding(P, pair)
        return CrossingRdRun(pair, None, (), family, bound)

    best: CrossingRdRun | None = None
    tried: list[str] = []
    last_pair: AvoidingPair | None = None
    for pair in candidate_pairs(P):
        last_pair = pair
        if pair.min_size < 2:
            continue
        plane = separating_hyperplane(P, pair.a, pair.b)
        frames = project_through(P, pair.a, pair.b, plane)
        try:
            nested = run_crossing_rd(frames[0].images)
        except VerificationFailed as e:
            tried.append(f"a={pair.a} b={pair.b}: {e}")
            continue
        lifted = lift(P, pair, frames[0], nested.family)
        if lifted is None:
            tried.append(f"a={pair.a} b={pair.b}: lift of {len(nested.family)} did not cross")
            continue
        fallback = nested.fallback or len(lifted) < 2
        run = CrossingRdRun(pair, plane, tuple(frames), CrossingFamily(lifted, verified=True), bound, fallback)
        if best is None or len(run.family) > len(best.family):
            best = run
        if len(best.family) >= 2:
            break
        tried.append(f"a={pair.a} b={pair.b}: base family of {len(nested.family)} in R^{d - 1}")

    if best is None:
        if last_pair is None or last_pair.min_size < 2:
            return single(last_pair)
        raise VerificationFailed(f"Lifted simplices do not cross pairwise in R^{d}: {'; '.join(tried)}")
    if best.fallback:
        assert best.pair is not None
        log.warning(
            "Crossing family in R^%s has %s simplex from an avoiding pair of size %s (%s)",
            d,
            len(best.family),
            best.pair.min_size,
            "; ".join(tried),
        )
    else:
        log.info("Crossing family of %s simplices in R^%s (bound %.3f)", len(best.family), d, bound)
    return best


def crossing_family_rd(P: PointSeq) -> CrossingFamily:
    return run_crossing_rd(P).family
