from fractions import Fraction

import pytest

from avoidkit.avoidance.avoid_predicates import mutually_avoiding
from avoidkit.avoidance.avoid_search import find_avoiding_heuristic
from avoidkit.avoidance.avoid_types import AvoidingPair
from avoidkit.errors import InputError
from avoidkit.fractional.frac_types import FractionalFamily, RegionFamily
from avoidkit.fractional.fractional_family import (
    check_crossing_variant,
    check_fractional,
    check_transversals,
    fractional_family,
    run_fractional_pipeline,
    verify_crossing_variant,
    verify_fractional,
)
from avoidkit.fractional.regions import build_regions, select_dense_regions
from avoidkit.fractional.support import support_of
from avoidkit.geometry.geom_types import PointSeq
from avoidkit.geometry.predicates import general_position
from avoidkit.toolkit.generators import GenKind, GenSpec, generate
from avoidkit.utils.seeded import transversal_count


def parabolas(half: int, height: int = 10**6) -> PointSeq:
    """
    An upward parabola near y=0 and a downward one near y=height, each with
    x in [-half, half]. Any subsets of the two are mutually avoiding.
    """
    xs = range(-half, half + 1)
    return PointSeq.of([(x, x * x) for x in xs] + [(x, height - x * x) for x in xs])


CLUSTERS = parabolas(12)

SQUARE = PointSeq.of([(0, 0), (1, 1), (1, 0), (0, 1)])


def test_fixture_is_general() -> None:
    assert len(CLUSTERS) == 50
    assert general_position(CLUSTERS)


def test_support_sizes() -> None:
    P = parabolas(20, 10**7)
    n = 41
    pair = AvoidingPair(tuple(range(n)), tuple(range(n, 2 * n)))
    support = support_of(P, pair)
    assert len(support.a_prime) == len(support.b_prime) == 11

    nine = AvoidingPair(tuple(range(16, 25)), tuple(range(57, 66)), verified=True)
    support = support_of(P, nine)
    assert len(support.a_prime) == 3
    assert support.a_prime == support.a_order[::4]
    assert support.b_prime == support.b_order[::4]

    five = AvoidingPair(tuple(range(18, 23)), tuple(range(59, 64)), verified=True)
    assert len(support_of(P, five).a_prime) == 2


def test_support_errors() -> None:
    with pytest.raises(InputError):
        support_of(CLUSTERS, AvoidingPair((0, 1, 2, 3), (25, 26, 27, 28)))
    with pytest.raises(InputError):
        support_of(CLUSTERS, AvoidingPair((0, 1, 2, 3, 4), (25, 26, 27, 28)))
    # Interleaved points on one parabola are not mutually avoiding.
    with pytest.raises(InputError):
        support_of(CLUSTERS, AvoidingPair((0, 2, 4, 6, 8), (1, 3, 5, 7, 9)))
    with pytest.raises(InputError):
        support_of(PointSeq.of([(0, 0, 0), (1, 0, 0)]), AvoidingPair((0,), (1,)))


def central_pair(P: PointSeq, half: int, m: int) -> AvoidingPair:
    """The m central points of each parabola of `parabolas(half)`."""
    side = 2 * half + 1
    lo = half - m // 2
    return AvoidingPair(tuple(range(lo, lo + m)), tuple(range(side + lo, side + lo + m)))


def test_regions_cover_non_support_points() -> None:
    pair = central_pair(CLUSTERS, 12, 9)
    assert mutually_avoiding(CLUSTERS, pair.a, pair.b)
    support = support_of(CLUSTERS, pair)
    rf = build_regions(CLUSTERS, support)
    assert len(rf.a_regions) == len(rf.b_regions) == 2

    for order, members in ((support.a_order, rf.members_a), (support.b_order, rf.members_b)):
        for pos, idx in enumerate(order):
            holding = [i for i, m in enumerate(members) if idx in m]
            if pos % 4 == 0:
                assert holding == []
            else:
                assert holding == [pos // 4]


def test_regions_are_disjoint_and_bounded() -> None:
    support = support_of(CLUSTERS, central_pair(CLUSTERS, 12, 9))
    rf = build_regions(CLUSTERS, support)
    for members in (rf.members_a, rf.members_b):
        flat = [i for m in members for i in m]
        assert len(flat) == len(set(flat))
        assert sum(len(m) for m in members) <= len(CLUSTERS)
    # Points beyond the outer support points fall in no region.
    assert 0 not in {i for m in rf.members_a for i in m}
    assert rf.counts_a == [3, 3]
    assert rf.counts_b == [3, 3]


def test_select_dense_regions() -> None:
    rf = RegionFamily((), (), ((), tuple(range(7)), (7, 8, 9)), ((1,), (2,), (3,)))
    assert select_dense_regions(rf, 1) == ([1], [0])
    assert select_dense_regions(rf, 2) == ([1, 2], [0, 1])
    with pytest.raises(InputError):
        select_dense_regions(rf, 4)
    with pytest.raises(InputError):
        select_dense_regions(rf, 0)


def test_fractional_family_clusters() -> None:
    run = run_fractional_pipeline(CLUSTERS, 2, 9)
    fam = run.family
    assert fam.k == 2
    assert fam.min_part_size >= 1
    verdict = check_fractional(CLUSTERS, fam, exhaustive=True)
    assert verdict.ok
    assert verdict.method == "exhaustive"
    assert verdict.checked == 3**4
    assert verify_crossing_variant(CLUSTERS, fam)
    assert fractional_family(CLUSTERS, 2, 9) == fam


def test_fractional_family_k1() -> None:
    fam = fractional_family(CLUSTERS, 1, 9)
    assert fam.k == 1
    assert verify_fractional(CLUSTERS, fam)
    assert verify_crossing_variant(CLUSTERS, fam)


def test_fractional_family_errors() -> None:
    with pytest.raises(InputError):
        fractional_family(CLUSTERS, 2, 8)
    with pytest.raises(InputError):
        fractional_family(CLUSTERS, 3, 9)
    with pytest.raises(InputError):
        fractional_family(PointSeq.of([(0, 0, 0), (1, 0, 0)]), 1, 5)


def test_verify_fractional_catches_bad_family() -> None:
    bad = FractionalFamily(((0,), (1,)), ((2,), (3,)))
    verdict = check_fractional(SQUARE, bad)
    assert not verdict.ok
    assert verdict.counterexample == (0, 1, 2, 3)

    sampled = check_fractional(SQUARE, bad, exhaustive_cap=0, trials=20, seed=9)
    assert not sampled.ok
    assert sampled.method == "sampling"
    assert sampled.checked == 1
    assert sampled.seed == 9


def test_verify_fractional_singletons() -> None:
    fam = FractionalFamily(((0,),), ((2,),))
    verdict = check_fractional(SQUARE, fam)
    assert verdict.ok
    assert verdict.method == "exhaustive"
    assert verdict.checked == 1


def test_planted_point_is_found_exhaustively() -> None:
    support = support_of(CLUSTERS, central_pair(CLUSTERS, 12, 9))
    rf = build_regions(CLUSTERS, support)
    # The middle B support point sits between the two B parts, so a line from it
    # down to any A point splits them.
    planted = tuple(sorted((*rf.members_a[0], support.b_prime[1])))
    fam = FractionalFamily((planted, rf.members_a[1]), rf.members_b)
    assert not check_fractional(CLUSTERS, fam, exhaustive=True).ok


def test_sampling_draws_exactly_trials() -> None:
    parts = [tuple(range(10 * i, 10 * i + 10)) for i in range(6)]
    seen: list[tuple[int, ...]] = []

    def accept(t: tuple[int, ...]) -> bool:
        seen.append(t)
        return True

    verdict = check_transversals(parts, accept, trials=1000, exhaustive_cap=200_000, seed=3)
    assert verdict.ok
    assert verdict.method == "sampling"
    assert verdict.checked == 1000
    assert len(seen) == 1000

    again: list[tuple[int, ...]] = []
    check_transversals(parts, lambda t: again.append(t) is None, trials=1000, exhaustive_cap=0, seed=3)
    assert sorted(again) == sorted(seen)


def test_crossing_variant_k1_is_vacuous() -> None:
    fam = FractionalFamily(((0,),), ((1,),))
    verdict = check_crossing_variant(SQUARE, fam)
    assert verdict.ok


def test_fractional_family_parts_are_exact() -> None:
    fam = fractional_family(CLUSTERS, 2, 9)
    a_x = [sorted(CLUSTERS[i][0] for i in part) for part in fam.a_parts]
    assert a_x == [[Fraction(x) for x in (1, 2, 3)], [Fraction(x) for x in (-3, -2, -1)]]


def shifted_clusters(n: int, seed: int, gap: int = 1000) -> PointSeq:
    """Seeded uniform points in the unit square with the second half moved `gap` along x."""
    P = generate(GenSpec(kind=GenKind.uniform, n=n, seed=seed))
    half = n // 2
    return PointSeq.of([(x + gap, y) if i >= half else (x, y) for i, (x, y) in enumerate(P)])


@pytest.mark.parametrize("kind", ["clusters", "uniform"])
@pytest.mark.parametrize("n", [200, 400])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_fractional_pipeline_seeded(kind: str, n: int, seed: int) -> None:
    if kind == "clusters":
        P = shifted_clusters(n, seed)
    else:
        P = generate(GenSpec(kind=GenKind.uniform, n=n, seed=seed))
    fam = fractional_family(P, 2, 9)
    assert fam.min_part_size >= 1

    verdict = check_fractional(P, fam)
    assert verdict.ok, verdict.counterexample
    expected = "exhaustive" if transversal_count(fam.parts) <= 200_000 else "sampling"
    assert verdict.method == expected
    assert check_crossing_variant(P, fam).ok


@pytest.mark.parametrize("seed", range(50))
def test_non_support_points_land_in_their_regions(seed: int) -> None:
    P = shifted_clusters(60, seed)
    pair = find_avoiding_heuristic(P, 9)
    assert pair.min_size >= 9
    support = support_of(P, pair.trimmed(9))
    rf = build_regions(P, support)
    for order, members in ((support.a_order, rf.members_a), (support.b_order, rf.members_b)):
        for pos, idx in enumerate(order):
            holding = [i for i, m in enumerate(members) if idx in m]
            assert holding == ([] if pos % 4 == 0 else [pos // 4])
