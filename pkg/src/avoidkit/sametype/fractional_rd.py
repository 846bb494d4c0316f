"""
Positive-fraction avoiding families in R^d: partition into parts with same-type
transversals, pick one representative per part, find an avoiding pair among the
representatives, and return the parts behind it. Since avoidance depends only on
the order type, every transversal of those parts is then mutually avoiding.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from avoidkit.avoidance.avoid_search import find_avoiding_heuristic, max_avoiding_bruteforce
from avoidkit.avoidance.avoid_types import AvoidingPair
from avoidkit.config.settings import get_settings
from avoidkit.errors import InputError, SearchFailed, VerificationFailed
from avoidkit.fractional.frac_types import CheckVerdict, FractionalFamily
from avoidkit.fractional.fractional_family import check_fractional
from avoidkit.geometry.geom_types import PointSeq
from avoidkit.highdim.avoid_rd import max_avoiding_bruteforce_rd
from avoidkit.sametype.partition import PartitionParts, nearest_to_centroid, same_type_partition

log = logging.getLogger(__name__)


def default_k_prime(k: int, d: int) -> int:
    return max(2 * k * k, (d + 2) * k)


@dataclass(frozen=True)
class FractionalRdRun:
    partition: PartitionParts
    representatives: tuple[int, ...]
    pair: AvoidingPair
    """Avoiding pair as indices into the representatives."""
    family: FractionalFamily
    verdict: CheckVerdict


def run_fractional_rd(
    P: PointSeq,
    k: int,
    *,
    k_prime: int | None = None,
    trials: int | None = None,
    seed: int | None = None,
) -> FractionalRdRun:
    d = P.dim
    if d < 2:
        raise InputError(f"Dimension must be at least 2, got {d}")
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    k_prime = k_prime if k_prime is not None else default_k_prime(k, d)
    if k_prime < 2 * k:
        raise InputError(f"k'={k_prime} parts cannot hold two sides of {k}")

    partition = same_type_partition(P, k_prime)
    reps = tuple(nearest_to_centroid(P, part)[0] for part in partition.parts)
    R = P.subset(reps)

    settings = get_settings()
    cap = settings.avoid_cap if d == 2 else settings.rd_avoid_cap
    if len(R) <= cap:
        pair = max_avoiding_bruteforce(R, cap=cap) if d == 2 else max_avoiding_bruteforce_rd(R, cap=cap)
    else:
        pair = find_avoiding_heuristic(R, k)
    if pair.min_size < k:
        raise SearchFailed(
            f"Representatives of {k_prime} parts admit no avoiding pair of size {k} "
            f"(best {pair.min_size}); try a larger k'"
        )
    pair = pair.trimmed(k)

    family = FractionalFamily(
        tuple(partition.parts[i] for i in pair.a),
        tuple(partition.parts[i] for i in pair.b),
    )
    verdict = check_fractional(P, family, trials=trials, seed=seed)
    if not verdict.ok:
        raise VerificationFailed(f"Transversal {verdict.counterexample} is not mutually avoiding")
    log.info("Fractional family in R^%s with part sizes %s", d, [len(p) for p in family.parts])
    return FractionalRdRun(partition, reps, pair, family, verdict)


def fractional_rd(P: PointSeq, k: int, *, k_prime: int | None = None) -> FractionalFamily:
    return run_fractional_rd(P, k, k_prime=k_prime).family
