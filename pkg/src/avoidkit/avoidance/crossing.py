from __future__ import annotations

import itertools
import logging

from avoidkit.avoidance.avoid_predicates import is_crossing_family, mutually_avoiding, segments_cross
from avoidkit.avoidance.avoid_types import AvoidingPair, CrossingFamily, Simplex
from avoidkit.avoidance.radial import Sense, radial_order
from avoidkit.config.settings import get_settings
from avoidkit.errors import CapExceeded, InputError, InternalError
from avoidkit.geometry.geom_types import PointSeq

log = logging.getLogger(__name__)


def radial_labels(P: PointSeq, pair: AvoidingPair) -> tuple[list[int], list[int]]:
    """
    A in clockwise order around the first point of B, and B in counterclockwise
    order around the first point of A. For a mutually avoiding pair either pivot
    choice gives the same lists.
    """
    a_order = radial_order(P, pair.a, P[pair.b[0]], Sense.clockwise)
    b_order = radial_order(P, pair.b, P[pair.a[0]], Sense.counterclockwise)
    return a_order, b_order


def crossing_family_from_avoiding(P: PointSeq, pair: AvoidingPair) -> CrossingFamily:
    """
    Join the points of a mutually avoiding pair |A| = |B| = k into k pairwise
    crossing segments, using the radial labelings of both sides.
    """
    if P.dim != 2:
        raise InputError(f"Crossing extraction is planar, got dimension {P.dim}")
    k = len(pair.a)
    if k != len(pair.b):
        raise InputError(f"Sides must have equal size, got {len(pair.a)} and {len(pair.b)}")
    if k == 0:
        return CrossingFamily((), verified=True)
    if not pair.verified and not mutually_avoiding(P, pair.a, pair.b):
        raise InputError("The pair is not mutually avoiding")

    a_order, b_order = radial_labels(P, pair)
    candidates = {
        "identity": list(zip(a_order, b_order, strict=True)),
        "reversed": list(zip(a_order, reversed(b_order), strict=True)),
    }
    for name, segments in candidates.items():
        if is_crossing_family(P, segments):
            log.debug("Crossing family of size %s from the %s pairing", k, name)
            return CrossingFamily(tuple(segments), verified=True)
        log.info("The %s pairing does not cross pairwise, trying the next", name)

    raise InternalError(
        f"No pairing of the radial labels crosses pairwise: A={a_order} B={b_order}"
    )


def max_crossing_family_bruteforce(P: PointSeq, *, cap: int | None = None) -> CrossingFamily:
    """
    A largest planar crossing family, by branch and bound over all segments.
    Segments are in lexicographic order, so the first maximum found is the
    lexicographically smallest one.
    """
    if P.dim != 2:
        raise InputError(f"Crossing families are searched in the plane, got dimension {P.dim}")
    cap = cap if cap is not None else get_settings().crossing_cap
    n = len(P)
    if n > cap:
        raise CapExceeded(
            f"Exhaustive crossing search is capped at {cap} points, got {n}; "
            "use an avoiding pair with crossing_family_from_avoiding instead"
        )

    pts = P.int_points
    segments: list[Simplex] = list(itertools.combinations(range(n), 2))
    compatible: list[set[int]] = [set() for _ in segments]
    for i, j in itertools.combinations(range(len(segments)), 2):
        (a, b), (c, d) = segments[i], segments[j]
        if {a, b} & {c, d}:
            continue
        crossed = segments_cross(pts[a], pts[b], pts[c], pts[d])
        if crossed is None:
            crossed = is_crossing_family(P, [segments[i], segments[j]])
        if crossed:
            compatible[i].add(j)
            compatible[j].add(i)

    best: list[int] = []
    limit = n // 2

    def extend(chosen: list[int], candidates: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(best) == limit:
            return
        for pos, s in enumerate(candidates):
            rest = candidates[pos + 1 :]
            if len(chosen) + 1 + len(rest) <= len(best):
                return
            chosen.append(s)
            extend(chosen, [t for t in rest if t in compatible[s]])
            chosen.pop()
            if len(best) == limit:
                return

    extend([], list(range(len(segments))))
    family = tuple(segments[i] for i in best)
    log.debug("Largest crossing family among %s points has size %s", n, len(family))
    return CrossingFamily(family, verified=is_crossing_family(P, family))
