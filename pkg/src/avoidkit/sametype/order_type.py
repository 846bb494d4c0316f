from __future__ import annotations

import itertools
from dataclasses import dataclass

from cachetools import LRUCache, cached

from avoidkit.errors import DegenerateInput
from avoidkit.geometry.geom_types import Orientation, PointSeq
from avoidkit.geometry.predicates import orient_sign


@dataclass(frozen=True)
class OrderType:
    """
    The orientation of every increasing (d+1)-tuple of indices of a point sequence.
    """

    dim: int
    n: int
    signs: dict[tuple[int, ...], Orientation]

    def __hash__(self) -> int:
        return hash((self.dim, self.n, tuple(sorted(self.signs.items()))))

    def negated(self) -> OrderType:
        return OrderType(self.dim, self.n, {t: Orientation(-s) for t, s in self.signs.items()})

    def sign_counts(self) -> tuple[int, int]:
        """Number of positive and negative tuples."""
        pos = sum(1 for s in self.signs.values() if s > 0)
        return pos, len(self.signs) - pos


@cached(LRUCache(maxsize=64))
def order_type(P: PointSeq) -> OrderType:
    """
    The order type of P. Raises on the first degenerate tuple.
    """
    pts = P.int_points
    signs: dict[tuple[int, ...], Orientation] = {}
    for combo in itertools.combinations(range(len(pts)), P.dim + 1):
        s = orient_sign([pts[i] for i in combo])
        if s == 0:
            raise DegenerateInput(f"Points {list(combo)} lie on a common hyperplane")
        signs[combo] = Orientation(s)
    return OrderType(P.dim, len(pts), signs)
