import time

from avoidkit.config.settings import settings_override
from avoidkit.utils.parallel import parallel_map
from avoidkit.utils.seeded import make_rng, random_transversal, spawn_rngs, transversal_count


def test_parallel_map_keeps_order() -> None:
    def slow_square(x: int) -> int:
        time.sleep(0.001 * (10 - x))
        return x * x

    assert parallel_map(slow_square, range(10), threads=4) == [x * x for x in range(10)]
    assert parallel_map(slow_square, [], threads=4) == []


def test_parallel_map_threads_from_settings() -> None:
    with settings_override(threads=3):
        assert parallel_map(str, [1, 2, 3]) == ["1", "2", "3"]


def test_seeded_streams() -> None:
    assert make_rng(7).integers(1000, size=5).tolist() == make_rng(7).integers(1000, size=5).tolist()

    first = [int(r.integers(2**32)) for r in spawn_rngs(11, 4)]
    again = [int(r.integers(2**32)) for r in spawn_rngs(11, 4)]
    assert first == again
    assert len(set(first)) == 4


def test_transversals() -> None:
    parts = [(0, 1), (2, 3, 4), (5,)]
    assert transversal_count(parts) == 6
    rng = make_rng(0)
    for _ in range(20):
        t = random_transversal(rng, parts)
        assert t[0] in parts[0] and t[1] in parts[1] and t[2] == 5
