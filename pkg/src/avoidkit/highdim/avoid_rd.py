from __future__ import annotations

from avoidkit.avoidance.avoid_search import exhaustive_max_avoiding
from avoidkit.avoidance.avoid_types import AvoidingPair
from avoidkit.config.settings import get_settings
from avoidkit.geometry.geom_types import PointSeq


def max_avoiding_bruteforce_rd(P: PointSeq, *, cap: int | None = None) -> AvoidingPair:
    """
    Exact largest mutually avoiding pair in any dimension. Sizes below d avoid
    trivially, so for n < 2d the answer is a pair of the first indices.
    """
    cap = cap if cap is not None else get_settings().rd_avoid_cap
    return exhaustive_max_avoiding(P, cap, "use the heuristic search for larger inputs")
