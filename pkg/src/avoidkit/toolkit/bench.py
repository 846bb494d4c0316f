"""
Benchmark harness: for each generator spec, the achieved avoiding-pair and crossing
family sizes next to the sqrt(n/12) bound, one CSV row per spec.
"""

from __future__ import annotations

import csv
import io
import logging
import math
from collections.abc import Sequence
from pathlib import Path

import yaml
from pydantic import BaseModel, TypeAdapter, ValidationError
from strif import atomic_output_file

from avoidkit.avoidance.avoid_search import find_avoiding_heuristic, max_avoiding_bruteforce
from avoidkit.avoidance.crossing import crossing_family_from_avoiding, max_crossing_family_bruteforce
from avoidkit.config.settings import get_settings
from avoidkit.errors import AvoidkitError, ConfigError
from avoidkit.highdim.avoid_rd import max_avoiding_bruteforce_rd
from avoidkit.highdim.crossing_rd import crossing_family_rd
from avoidkit.toolkit.generators import GenSpec, generate
from avoidkit.toolkit.reports import format_bool
from avoidkit.utils.parallel import parallel_map

log = logging.getLogger(__name__)

BENCH_FORMAT = 1

COLUMNS = (
    "kind",
    "n",
    "d",
    "seed",
    "avoiding_min_size",
    "crossing_size",
    "bound_sqrt_n12",
    "meets_bound",
    "method",
    "error",
)


class BenchRow(BaseModel):
    generator: GenSpec
    avoiding_min_size: int = 0
    crossing_size: int = 0
    method: str = ""
    error: str = ""

    @property
    def bound_sqrt_n12(self) -> str:
        return f"{math.sqrt(self.generator.n / 12):.6f}"

    @property
    def meets_bound(self) -> bool:
        """Exact test of size >= sqrt(n/12)."""
        return 12 * self.avoiding_min_size**2 >= self.generator.n

    def as_record(self) -> list[str]:
        g = self.generator
        return [
            g.kind.value,
            str(g.n),
            str(g.dim),
            str(g.seed),
            str(self.avoiding_min_size),
            str(self.crossing_size),
            self.bound_sqrt_n12,
            format_bool(self.meets_bound) if not self.error else "",
            self.method,
            self.error,
        ]


def bound_target(n: int) -> int:
    """Smallest s with s >= sqrt(n/12)."""
    s = math.isqrt(n // 12)
    while 12 * s * s < n:
        s += 1
    return max(1, s)


def bench_row(spec: GenSpec) -> BenchRow:
    settings = get_settings()
    try:
        P = generate(spec)
        n, d = len(P), P.dim
        if n < 2:
            return BenchRow(generator=spec, method="trivial")
        if d == 2 and n <= settings.avoid_cap:
            pair, method = max_avoiding_bruteforce(P), "oracle"
        elif d > 2 and n <= settings.rd_avoid_cap:
            pair, method = max_avoiding_bruteforce_rd(P), "oracle"
        else:
            pair, method = find_avoiding_heuristic(P, bound_target(n)), "heuristic"
        pair = pair.trimmed(pair.min_size)

        if d == 2 and n <= settings.crossing_cap:
            crossing = len(max_crossing_family_bruteforce(P))
        elif d == 2:
            crossing = len(crossing_family_from_avoiding(P, pair))
        else:
            crossing = len(crossing_family_rd(P))
        log.debug("%s: avoiding %s, crossing %s", spec.label, pair.min_size, crossing)
        return BenchRow(generator=spec, avoiding_min_size=pair.min_size, crossing_size=crossing, method=method)
    except AvoidkitError as e:
        log.warning("%s failed: %s", spec.label, e)
        return BenchRow(generator=spec, error=f"{type(e).__name__}: {e}")


def run_bench(specs: Sequence[GenSpec], threads: int | None = None) -> list[BenchRow]:
    return parallel_map(bench_row, specs, threads)


def format_bench_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    buf.write(f"# format={BENCH_FORMAT}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(row.as_record())
    return buf.getvalue()


def bench(specs: Sequence[GenSpec], out: Path, threads: int | None = None) -> list[BenchRow]:
    rows = run_bench(specs, threads)
    with atomic_output_file(out, make_parents=True) as tmp:
        Path(tmp).write_text(format_bench_csv(rows))
    return rows


_SPEC_LIST = TypeAdapter(list[GenSpec])


def load_bench_specs(path: Path) -> list[GenSpec]:
    """A YAML list of generator specs, e.g. `- {kind: uniform, n: 48, seed: 3}`."""
    try:
        data = yaml.safe_load(Path(path).read_text())
        return _SPEC_LIST.validate_python(data or [])
    except (yaml.YAMLError, ValidationError) as e:
        raise ConfigError(f"Invalid bench specs in {path}: {e}") from e
