from __future__ import annotations

import logging
import math
import sys
from fractions import Fraction
from pathlib import Path

from prettyfmt import fmt_path
from pydantic import ValidationError

from avoidkit.avoidance.avoid_predicates import is_crossing_family, mutually_avoiding
from avoidkit.avoidance.avoid_search import find_avoiding_heuristic, max_avoiding_bruteforce
from avoidkit.avoidance.avoid_types import AvoidingPair, index_set
from avoidkit.avoidance.crossing import crossing_family_from_avoiding, max_crossing_family_bruteforce
from avoidkit.config.settings import get_settings
from avoidkit.errors import InputError, ParseError, VerificationFailed
from avoidkit.fractional.frac_types import FractionalFamily
from avoidkit.fractional.fractional_family import (
    check_crossing_variant,
    check_fractional,
    run_fractional_pipeline,
)
from avoidkit.fractional.regions import build_regions
from avoidkit.fractional.support import support_of
from avoidkit.geometry.geom_types import PointSeq
from avoidkit.geometry.predicates import check_general_position
from avoidkit.highdim.avoid_rd import max_avoiding_bruteforce_rd
from avoidkit.highdim.crossing_rd import run_crossing_rd
from avoidkit.highdim.projection import frames_agree
from avoidkit.sametype.fractional_rd import run_fractional_rd
from avoidkit.sametype.partition import same_type_partition
from avoidkit.sametype.transversals import check_same_type
from avoidkit.toolkit.bench import bench, bound_target, load_bench_specs
from avoidkit.toolkit.generators import GenKind, GenSpec, generate_points
from avoidkit.toolkit.point_io import format_points, format_rational, read_points, write_points
from avoidkit.toolkit.reports import (
    Report,
    format_index_set,
    format_index_sets,
    format_simplices,
    parse_index_set,
    parse_index_sets,
    parse_simplices,
    read_report,
    sizes,
    write_report,
)
from avoidkit.toolkit.svg_render import (
    HullOverlay,
    Overlay,
    SegmentsOverlay,
    WedgeOverlay,
    avoiding_pair_overlays,
    render_svg,
)
from avoidkit.ui.rich_output import (
    format_name_and_value,
    print_heading,
    print_subtle,
    print_verdict,
    print_warning,
    rprint,
)

log = logging.getLogger(__name__)


def _bound(n: int) -> str:
    return f"{math.sqrt(n / 12):.6f}"


def _finish(report: Report, output: Path | None, ok: bool = True, failure: str = "") -> None:
    write_report(report, output)
    if output is not None:
        print_subtle(f"Report written to {fmt_path(output)}")
    if not ok:
        raise VerificationFailed(failure or f"{report.kind} failed verification")


def cli_gen(kind: str, n: int, dim: int, seed: int | None, delta: str | None, output: Path | None) -> None:
    values: dict[str, object] = {"kind": GenKind(kind), "n": n, "dim": dim}
    values["seed"] = seed if seed is not None else get_settings().seed
    if delta is not None:
        try:
            values["delta"] = Fraction(delta)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"Not a rational delta: {delta!r}") from None
    try:
        spec = GenSpec.model_validate(values)
    except ValidationError as e:
        raise InputError(f"Invalid generator settings: {e}") from e
    P, retries = generate_points(spec)
    if output is None:
        sys.stdout.write(format_points(P))
    else:
        write_points(P, output)
        print_subtle(f"Wrote {len(P)} points to {fmt_path(output)}")
    if retries:
        print_subtle(f"General position reached after {retries} retries")


def _read_general(input: Path) -> PointSeq:
    P = read_points(input)
    check_general_position(P)
    return P


def _avoiding_pair(P: PointSeq, m: int | None) -> tuple[AvoidingPair, str]:
    settings = get_settings()
    cap = settings.avoid_cap if P.dim == 2 else settings.rd_avoid_cap
    if m is None and len(P) <= cap:
        exact = max_avoiding_bruteforce(P) if P.dim == 2 else max_avoiding_bruteforce_rd(P)
        return exact, "oracle"
    target = m if m is not None else bound_target(len(P))
    return find_avoiding_heuristic(P, target), "heuristic"


def cli_find_avoiding(input: Path, m: int | None, output: Path | None) -> None:
    P = _read_general(input)
    pair, method = _avoiding_pair(P, m)
    pair = pair.trimmed(pair.min_size)
    report = Report("avoiding_pair")
    report.add("n", len(P)).add("d", P.dim).add("method", method)
    report.add("a", format_index_set(pair.a)).add("b", format_index_set(pair.b))
    report.add("min_size", pair.min_size).add("bound_sqrt_n12", _bound(len(P)))
    report.add("meets_bound", 12 * pair.min_size**2 >= len(P)).add("verified", pair.verified)
    print_verdict(pair.verified, f"Mutually avoiding pair of size {pair.min_size} ({method})")
    _finish(report, output, pair.verified)


def cli_find_crossing(input: Path, output: Path | None) -> None:
    P = _read_general(input)
    if P.dim != 2:
        raise InputError(f"find-crossing is planar; use crossing-rd for dimension {P.dim}")
    if len(P) <= get_settings().crossing_cap:
        family, method = max_crossing_family_bruteforce(P), "oracle"
    else:
        pair, _ = _avoiding_pair(P, None)
        family = crossing_family_from_avoiding(P, pair.trimmed(pair.min_size))
        method = "from_avoiding_pair"
    report = Report("crossing_family")
    report.add("n", len(P)).add("d", P.dim).add("method", method)
    report.add("simplices", format_simplices(family.simplices)).add("size", len(family))
    report.add("verified", family.verified)
    print_verdict(family.verified, f"Crossing family of size {len(family)} ({method})")
    _finish(report, output, family.verified)


def cli_fractional(
    input: Path, k: int, m: int, seed: int | None, exhaustive: bool, output: Path | None
) -> None:
    P = _read_general(input)
    run = run_fractional_pipeline(P, k, m)
    fam = run.family
    verdict = check_fractional(P, fam, seed=seed, exhaustive=exhaustive)
    crossing = check_crossing_variant(P, fam, seed=seed, exhaustive=exhaustive)

    report = Report("fractional")
    report.add("n", len(P)).add("k", k).add("m", m)
    report.add("a", format_index_set(run.pair.a)).add("b", format_index_set(run.pair.b))
    report.add("a_prime", format_index_set(run.support.a_prime))
    report.add("b_prime", format_index_set(run.support.b_prime))
    report.add("alpha", format_index_set(run.regions.counts_a))
    report.add("beta", format_index_set(run.regions.counts_b))
    report.add("selected_a", format_index_set(run.selected_a))
    report.add("selected_b", format_index_set(run.selected_b))
    report.add("a_parts", format_index_sets(fam.a_parts)).add("b_parts", format_index_sets(fam.b_parts))
    report.add("part_sizes", sizes(fam.parts)).add("fraction", Fraction(fam.min_part_size, len(P)))
    report.add("verify_method", verdict.method).add("verify_checked", verdict.checked)
    report.add("seed", verdict.seed if verdict.seed is not None else "")
    report.add("verified", verdict.ok).add("crossing_variant", crossing.ok)

    print_heading("Fractional family")
    for key in ("alpha", "beta", "part_sizes", "fraction"):
        rprint(format_name_and_value(key, report.get(key)))
    print_verdict(verdict.ok, f"Transversals mutually avoiding ({verdict.method}, {verdict.checked} checked)")
    print_verdict(crossing.ok, "Crossing pattern holds on transversals")
    ok = verdict.ok and crossing.ok
    _finish(report, output, ok, f"Counterexample transversal: {verdict.counterexample or crossing.counterexample}")


def cli_fractional_rd(input: Path, k: int, k_prime: int | None, seed: int | None, output: Path | None) -> None:
    P = _read_general(input)
    run = run_fractional_rd(P, k, k_prime=k_prime, seed=seed)
    fam = run.family
    report = Report("fractional_rd")
    report.add("n", len(P)).add("d", P.dim).add("k", k).add("k_prime", len(run.partition.parts))
    report.add("partition_method", run.partition.method.value)
    report.add("partition_fallback", run.partition.fallback)
    report.add("representatives", format_index_set(run.representatives))
    report.add("a_parts", format_index_sets(fam.a_parts)).add("b_parts", format_index_sets(fam.b_parts))
    report.add("part_sizes", sizes(fam.parts)).add("fraction", Fraction(fam.min_part_size, len(P)))
    report.add("verify_method", run.verdict.method).add("verify_checked", run.verdict.checked)
    report.add("verified", run.verdict.ok)
    print_verdict(run.verdict.ok, f"Fractional family with k={k} in R^{P.dim}")
    _finish(report, output, run.verdict.ok)


def cli_crossing_rd(input: Path, output: Path | None) -> None:
    P = _read_general(input)
    run = run_crossing_rd(P)
    report = Report("crossing_rd")
    report.add("n", len(P)).add("d", P.dim)
    report.add("simplices", format_simplices(run.family.simplices)).add("size", len(run.family))
    report.add("bound", f"{run.bound:.6f}").add("fallback", run.fallback)
    if run.pair is not None:
        report.add("a", format_index_set(run.pair.a)).add("b", format_index_set(run.pair.b))
    if run.plane is not None:
        report.add("plane_normal", " ".join(format_rational(c) for c in run.plane.normal))
        report.add("plane_offset", format_rational(run.plane.offset))
        report.add("frames_agree", frames_agree(run.frames))
    report.add("verified", run.family.verified)
    if run.fallback:
        print_warning(f"Only a single simplex in R^{P.dim}: no avoiding pair gave two crossing simplices")
    print_verdict(run.family.verified, f"Crossing family of {len(run.family)} simplices in R^{P.dim}")
    _finish(report, output, run.family.verified)


def cli_sametype_partition(input: Path, k: int, output: Path | None) -> None:
    P = _read_general(input)
    result = same_type_partition(P, k)
    report = Report("sametype_partition")
    report.add("n", len(P)).add("d", P.dim).add("k", k)
    report.add("parts", format_index_sets(result.parts)).add("sizes", sizes(result.parts))
    report.add("fraction", result.fraction).add("method", result.method.value)
    report.add("fallback", result.fallback)
    if result.fallback:
        print_warning("Parts shrank to singletons")
    print_verdict(True, f"Same-type partition into {k} parts, fraction {result.fraction}")
    _finish(report, output)


def _verify_claim(
    P: PointSeq, claim: Report, exhaustive: bool, trials: int | None, seed: int | None
) -> tuple[bool, str]:
    n = len(P)
    if claim.kind == "avoiding_pair":
        a = index_set(parse_index_set(claim.get("a")), n)
        b = index_set(parse_index_set(claim.get("b")), n)
        return mutually_avoiding(P, a, b), "exhaustive"
    if claim.kind in ("crossing_family", "crossing_rd"):
        simplices = parse_simplices(claim.get("simplices"))
        return is_crossing_family(P, simplices), "exhaustive"
    if claim.kind in ("fractional", "fractional_rd"):
        fam = FractionalFamily(
            tuple(index_set(p, n) for p in parse_index_sets(claim.get("a_parts"))),
            tuple(index_set(p, n) for p in parse_index_sets(claim.get("b_parts"))),
        )
        verdict = check_fractional(P, fam, trials=trials, seed=seed, exhaustive=exhaustive)
        ok = verdict.ok
        if claim.kind == "fractional" and P.dim == 2:
            ok = ok and check_crossing_variant(P, fam, trials=trials, seed=seed, exhaustive=exhaustive).ok
        return ok, verdict.method
    if claim.kind == "sametype_partition":
        parts = tuple(index_set(p, n) for p in parse_index_sets(claim.get("parts")))
        cap = sys.maxsize if exhaustive else None
        same = check_same_type(P, parts, exhaustive_cap=cap, trials=trials, seed=seed)
        return same.same_type, same.method.value
    raise ParseError(f"cannot verify reports of kind `{claim.kind}`")


def cli_verify(
    input: Path,
    report_path: Path,
    exhaustive: bool,
    trials: int | None,
    seed: int | None,
    output: Path | None,
) -> None:
    P = read_points(input)
    claim = read_report(report_path)
    ok, method = _verify_claim(P, claim, exhaustive, trials, seed)
    report = Report("verification")
    report.add("claim", claim.kind).add("method", method).add("ok", ok)
    print_verdict(ok, f"Claim `{claim.kind}` holds ({method})", f"Claim `{claim.kind}` does not hold ({method})")
    _finish(report, output, ok, f"Claim `{claim.kind}` in {fmt_path(report_path)} does not hold")


def cli_bench(
    specs_path: Path | None,
    kind: str,
    ns: list[int],
    dim: int,
    seeds: int,
    output: Path,
) -> None:
    if specs_path is not None:
        specs = load_bench_specs(specs_path)
    else:
        try:
            specs = [
                GenSpec(kind=GenKind(kind), n=n, dim=dim, seed=seed) for n in ns for seed in range(seeds)
            ]
        except ValidationError as e:
            raise InputError(f"Invalid bench settings: {e}") from e
    rows = bench(specs, output)
    failed = sum(1 for r in rows if r.error)
    met = sum(1 for r in rows if not r.error and r.meets_bound)
    print_heading("Bench")
    print_verdict(failed == 0, f"{len(rows)} rows, {met} meet the sqrt(n/12) bound", f"{failed} of {len(rows)} rows failed")
    print_subtle(f"CSV written to {fmt_path(output)}")


def _overlays_for(P: PointSeq, claim: Report) -> list[Overlay]:
    if claim.kind == "avoiding_pair":
        pair = AvoidingPair(parse_index_set(claim.get("a")), parse_index_set(claim.get("b")))
        return avoiding_pair_overlays(pair)
    if claim.kind in ("crossing_family", "crossing_rd"):
        segments = tuple((s[0], s[1]) for s in parse_simplices(claim.get("simplices")) if len(s) == 2)
        return [SegmentsOverlay(segments)]
    if claim.kind in ("fractional", "fractional_rd"):
        wedges: list[Overlay] = []
        if claim.kind == "fractional":
            pair = AvoidingPair(parse_index_set(claim.get("a")), parse_index_set(claim.get("b")))
            regions = build_regions(P, support_of(P, pair))
            selected_a = parse_index_set(claim.get("selected_a"))
            selected_b = parse_index_set(claim.get("selected_b"))
            wedges = [
                *(WedgeOverlay(regions.a_regions[i], color="#1f77b4") for i in selected_a),
                *(WedgeOverlay(regions.b_regions[i], color="#ff7f0e") for i in selected_b),
            ]
        return [
            *wedges,
            *(HullOverlay(p, color="#1f77b4") for p in parse_index_sets(claim.get("a_parts"))),
            *(HullOverlay(p, color="#ff7f0e") for p in parse_index_sets(claim.get("b_parts"))),
        ]
    if claim.kind == "sametype_partition":
        return [HullOverlay(p, color="#2ca02c") for p in parse_index_sets(claim.get("parts"))]
    raise ParseError(f"cannot render reports of kind `{claim.kind}`")


def cli_render(input: Path, report_path: Path | None, output: Path) -> None:
    P = read_points(input)
    overlays = _overlays_for(P, read_report(report_path)) if report_path is not None else []
    render_svg(P, overlays, output)
    print_subtle(f"SVG written to {fmt_path(output)}")
