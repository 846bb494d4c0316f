"""
Searches for large mutually avoiding pairs: an exhaustive oracle for small point
sets and a directional sweep heuristic for larger ones.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence

from avoidkit.avoidance.avoid_predicates import IntPoint, SideTable, avoids_points, one_side
from avoidkit.avoidance.avoid_types import AvoidingPair
from avoidkit.config.settings import get_settings
from avoidkit.errors import CapExceeded, InputError, VerificationFailed
from avoidkit.geometry.geom_types import PointSeq

log = logging.getLogger(__name__)


## Exhaustive search


def _mask(indices: Sequence[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _first_partner(table: SideTable, A: tuple[int, ...], m: int) -> tuple[int, ...] | None:
    """
    Lexicographically smallest B of size m, disjoint from A, with (A, B) mutually
    avoiding. B grows one index at a time and every step checks both directions.
    """
    d = table.dim
    a_mask = _mask(A)
    a_planes = list(itertools.combinations(A, d)) if len(A) >= d else []
    free = [i for i in range(table.n) if not a_mask >> i & 1]

    def ok_to_add(chosen: list[int], b_mask: int, b: int) -> bool:
        new_mask = b_mask | 1 << b
        if not all(table.one_side(h, new_mask) for h in a_planes):
            return False
        if len(chosen) + 1 >= d:
            for rest in itertools.combinations(chosen, d - 1):
                h = tuple(sorted((*rest, b)))
                if not table.one_side(h, a_mask):
                    return False
        return True

    def grow(chosen: list[int], b_mask: int, start: int) -> tuple[int, ...] | None:
        if len(chosen) == m:
            return tuple(chosen)
        for pos in range(start, len(free)):
            if len(free) - pos < m - len(chosen):
                return None
            b = free[pos]
            if ok_to_add(chosen, b_mask, b):
                chosen.append(b)
                found = grow(chosen, b_mask | 1 << b, pos + 1)
                if found is not None:
                    return found
                chosen.pop()
        return None

    return grow([], 0, 0)


def exhaustive_max_avoiding(P: PointSeq, cap: int, fallback_hint: str) -> AvoidingPair:
    """
    A pair maximizing min(|A|, |B|), both sides of that size, lexicographically
    smallest among maxima (A first, then B). Works in any dimension.
    """
    n = len(P)
    if n > cap:
        raise CapExceeded(f"Exhaustive avoiding-pair search is capped at {cap} points, got {n}; {fallback_hint}")
    if n < 2:
        raise InputError(f"An avoiding pair needs at least 2 points, got {n}")

    d = P.dim
    top = n // 2
    if top < d:
        # No side spans a hyperplane, so any disjoint pair avoids.
        return AvoidingPair(tuple(range(top)), tuple(range(top, 2 * top)), verified=True)

    table = SideTable.build(P)
    for m in range(top, 0, -1):
        if m < d:
            return AvoidingPair(tuple(range(m)), tuple(range(m, 2 * m)), verified=True)
        for A in itertools.combinations(range(n), m):
            B = _first_partner(table, A, m)
            if B is not None:
                log.debug("Exhaustive search: best min size %s for %s points", m, n)
                return AvoidingPair(A, B, verified=True)
        log.debug("Exhaustive search: no avoiding pair of size %s", m)
    raise AssertionError("unreachable: singletons always avoid")


def max_avoiding_bruteforce(P: PointSeq, *, cap: int | None = None) -> AvoidingPair:
    """
    Exact largest mutually avoiding pair, for point sets up to the configured cap.
    """
    cap = cap if cap is not None else get_settings().avoid_cap
    return exhaustive_max_avoiding(P, cap, "use find_avoiding_heuristic for larger inputs")


## Directional sweep heuristic


def sweep_directions(pts: Sequence[IntPoint], limit: int) -> list[tuple[int, ...]]:
    """
    Directions p_j - p_i for point pairs, longest first (ties by index pair), at
    most `limit` of them.
    """

    def length2(pair: tuple[int, int]) -> int:
        p, q = pts[pair[0]], pts[pair[1]]
        return sum((a - b) ** 2 for a, b in zip(p, q, strict=True))

    pairs = sorted(itertools.combinations(range(len(pts)), 2), key=lambda pr: (-length2(pr), pr))
    return [
        tuple(b - a for a, b in zip(pts[i], pts[j], strict=True)) for i, j in pairs[:limit]
    ]


class _PairGrower:
    """
    Grows a mutually avoiding pair one point at a time, checking only the new
    hyperplanes and the sides the new point must respect.
    """

    def __init__(self, pts: Sequence[IntPoint], dim: int, a: list[int], b: list[int]):
        self.pts = pts
        self.dim = dim
        self.sides = (a, b)

    def try_add(self, side: int, idx: int) -> bool:
        own, other = self.sides[side], self.sides[1 - side]
        d = self.dim
        if len(own) + 1 >= d:
            for rest in itertools.combinations(own, d - 1):
                if not one_side(self.pts, (*rest, idx), other):
                    return False
        if len(other) >= d:
            # The rest of `own` already sits on one side of each plane of `other`.
            witness = (own[0], idx) if own else (idx,)
            for h in itertools.combinations(other, d):
                if not one_side(self.pts, h, witness):
                    return False
        own.append(idx)
        return True


def _block_pair(
    pts: Sequence[IntPoint], dim: int, order: list[int], m: int
) -> tuple[list[int], list[int]] | None:
    for size in range(m, 0, -1):
        a, b = order[:size], order[-size:]
        if avoids_points(pts, dim, a, b) and avoids_points(pts, dim, b, a):
            return a, b
    return None


def _greedy_extend(
    pts: Sequence[IntPoint], dim: int, order: list[int], a: list[int], b: list[int], target: int, window: int
) -> tuple[list[int], list[int]]:
    """
    Add points inward from both ends of the sweep order, alternating sides, while
    the pair stays mutually avoiding.
    """
    grower = _PairGrower(pts, dim, list(a), list(b))
    used = set(a) | set(b)
    span = window * target
    a_pool: Iterator[int] = (i for i in order[len(a) : len(a) + span] if i not in used)
    b_pool: Iterator[int] = (i for i in reversed(order[: len(order) - len(b)][-span:]) if i not in used)
    pools = [a_pool, b_pool]
    active = [True, True]
    side = 0
    while any(active) and min(len(s) for s in grower.sides) < target:
        if active[side] and len(grower.sides[side]) < target:
            for idx in pools[side]:
                if idx in used:
                    continue
                if grower.try_add(side, idx):
                    used.add(idx)
                    break
            else:
                active[side] = False
        elif len(grower.sides[side]) >= target:
            active[side] = False
        side = 1 - side
    return grower.sides[0], grower.sides[1]


def find_avoiding_heuristic(
    P: PointSeq,
    target: int,
    *,
    max_directions: int | None = None,
    greedy_window: int | None = None,
) -> AvoidingPair:
    """
    A verified mutually avoiding pair with min size `target` if the sweep finds one,
    else the largest verified pair it saw.

    For each direction (from the longest point pairs) points are sorted by their
    projection; the m lowest and m highest form a candidate pair that shrinks until
    it verifies, then grows greedily inward from both ends.
    """
    n = len(P)
    if n < 2:
        raise InputError(f"An avoiding pair needs at least 2 points, got {n}")
    if target < 1:
        raise InputError(f"Target size must be positive, got {target}")
    settings = get_settings()
    max_directions = max_directions if max_directions is not None else settings.max_directions
    greedy_window = greedy_window if greedy_window is not None else settings.greedy_window

    pts = P.int_points
    d = P.dim
    m = min(target, n // 2)
    best: tuple[list[int], list[int]] | None = None
    best_size = 0

    for count, direction in enumerate(sweep_directions(pts, max_directions)):
        order = sorted(range(n), key=lambda i: (sum(c * x for c, x in zip(direction, pts[i], strict=True)), i))
        block = _block_pair(pts, d, order, m)
        if block is None:
            continue
        a, b = block
        if len(a) < m:
            a, b = _greedy_extend(pts, d, order, a, b, m, greedy_window)
        size = min(len(a), len(b))
        if size > best_size:
            best, best_size = (a[:size], b[:size]), size
            log.debug("Direction %s: avoiding pair of size %s", count, size)
        if best_size >= m:
            break

    if best is None:
        raise VerificationFailed("No direction produced a mutually avoiding pair")
    a, b = best
    if not (avoids_points(pts, d, a, b) and avoids_points(pts, d, b, a)):
        raise VerificationFailed(f"Heuristic pair failed verification: A={sorted(a)} B={sorted(b)}")
    if best_size < target:
        log.info("Heuristic found size %s, short of the target %s", best_size, target)
    return AvoidingPair(tuple(sorted(a)), tuple(sorted(b)), verified=True)
