"""
avoidkit builds and checks mutually avoiding point sets, crossing families, and
positive-fraction families in the plane and in R^d, with exact rational arithmetic.
"""

import argparse
import logging
import sys
from importlib.metadata import version
from pathlib import Path
from textwrap import dedent

from rich.logging import RichHandler

from avoidkit.cli.cli_commands import (
    cli_bench,
    cli_crossing_rd,
    cli_find_avoiding,
    cli_find_crossing,
    cli_fractional,
    cli_fractional_rd,
    cli_gen,
    cli_render,
    cli_sametype_partition,
    cli_verify,
)
from avoidkit.config.settings import load_dotenv_files, settings_override
from avoidkit.errors import AvoidkitError
from avoidkit.toolkit.generators import GenKind
from avoidkit.ui.rich_output import console, print_error, rprint
from avoidkit.ui.styles import STYLE_HINT
from avoidkit.utils.help_format import MarkdownHelpFormatter

APP_NAME = "avoidkit"

APP_DESCRIPTION = dedent("""
    **Mutually avoiding sets and crossing families, exactly**

    Generate point sets, search for mutually avoiding pairs and crossing families,
    build positive-fraction families, and verify any of these claims again later.

    Reports are `key=value` lines on stdout (or `--output`). Exit codes: 0 success,
    1 verification failure, 2 input error, 3 size cap exceeded.
    """).strip()


def get_app_version() -> str:
    try:
        return "v" + version(APP_NAME)
    except Exception:
        return "unknown"


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="verbose output")
    common.add_argument("--debug", action="store_true", help="debug output")
    common.add_argument("--seed", type=int, help="seed for generators and sampling")
    common.add_argument("--trials", type=int, help="sampled transversals when not exhaustive")
    common.add_argument("--cap", type=int, help="size cap for all exhaustive searches")
    common.add_argument("--threads", type=int, help="worker threads (default from AVOIDKIT_THREADS)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        formatter_class=MarkdownHelpFormatter,
        description=APP_DESCRIPTION,
        epilog=f"{APP_NAME} {get_app_version()}",
    )
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {get_app_version()}")

    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str, description: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(
            name,
            help=help,
            description=dedent(description).strip(),
            formatter_class=MarkdownHelpFormatter,
            parents=[common],
        )

    def input_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", type=Path, required=True, help="point file")
        p.add_argument("--output", type=Path, help="report file (stdout if omitted)")

    gen = add(
        "gen",
        "Generate a point set in general position.",
        """
        Generate a seeded point set. Kinds: `uniform`, `perturbed_grid`, `convex`
        (planar), and `moment_curve`. Output is a point file: a `d n` header and one
        row of exact coordinates per point.
        """,
    )
    gen.add_argument("--kind", choices=[k.value for k in GenKind], default=GenKind.uniform.value)
    gen.add_argument("--n", type=int, required=True, help="number of points")
    gen.add_argument("--dim", type=int, default=2, help="dimension")
    gen.add_argument("--delta", type=str, help="perturbation radius for perturbed_grid, e.g. 1/16")
    gen.add_argument("--output", type=Path, help="point file (stdout if omitted)")

    find_avoiding = add(
        "find-avoiding",
        "Find a large mutually avoiding pair.",
        """
        Exact search when the point set is within the cap and `--m` is not given,
        otherwise the directional sweep heuristic with target size `--m` (default:
        the smallest size meeting the sqrt(n/12) bound).
        """,
    )
    input_output(find_avoiding)
    find_avoiding.add_argument("--m", type=int, help="target size for the heuristic")

    find_crossing = add(
        "find-crossing",
        "Find a large planar crossing family.",
        """
        Exhaustive branch and bound within the crossing cap, otherwise a crossing
        family extracted from an avoiding pair.
        """,
    )
    input_output(find_crossing)

    fractional = add(
        "fractional",
        "Build a planar positive-fraction family.",
        """
        Avoiding pair of size `--m`, its support, the wedge regions, and the `--k`
        densest regions per side as parts. Transversals are then checked for mutual
        avoidance and for the crossing pattern.
        """,
    )
    input_output(fractional)
    fractional.add_argument("--k", type=int, default=2, help="parts per side")
    fractional.add_argument("--m", type=int, default=9, help="avoiding pair size, 1 mod 4")
    fractional.add_argument("--exhaustive", action="store_true", help="check every transversal")

    fractional_rd = add(
        "fractional-rd",
        "Build a positive-fraction family in R^d.",
        """
        Same-type partition into k' parts, an avoiding pair among part
        representatives, and the parts behind it.
        """,
    )
    input_output(fractional_rd)
    fractional_rd.add_argument("--k", type=int, default=2, help="parts per side")
    fractional_rd.add_argument("--k-prime", type=int, help="number of partition parts")

    crossing_rd = add(
        "crossing-rd",
        "Build a crossing family of simplices in R^d.",
        """
        Separate an avoiding pair, project through an apex, recurse one dimension
        down, and lift the simplices back with distinct apexes.
        """,
    )
    input_output(crossing_rd)

    sametype = add(
        "sametype-partition",
        "Partition into parts with same-type transversals.",
        """
        Contiguous blocks by first coordinate, shrunk toward their centroids until
        every tuple of parts verifies.
        """,
    )
    input_output(sametype)
    sametype.add_argument("--k", type=int, required=True, help="number of parts")

    verify = add(
        "verify",
        "Check a report's claim against its point file.",
        """
        Re-check the claim in a report written by another command. Exits with 1 if
        the claim does not hold.
        """,
    )
    input_output(verify)
    verify.add_argument("--report", type=Path, required=True, help="report to verify")
    verify.add_argument("--exhaustive", action="store_true", help="check every transversal")

    bench = add(
        "bench",
        "Tabulate achieved sizes against the sqrt(n/12) bound.",
        """
        One CSV row per generator spec, from a YAML list (`--specs`) or from
        `--kind`, `--n` and `--seeds`.
        """,
    )
    bench.add_argument("--specs", type=Path, help="YAML list of generator specs")
    bench.add_argument("--kind", choices=[k.value for k in GenKind], default=GenKind.uniform.value)
    bench.add_argument("--n", type=int, nargs="+", default=[12, 48, 108], help="point counts")
    bench.add_argument("--dim", type=int, default=2, help="dimension")
    bench.add_argument("--seeds", type=int, default=5, help="seeds 0..seeds-1 per point count")
    bench.add_argument("--output", type=Path, required=True, help="CSV file")

    render = add(
        "render",
        "Draw a planar point set and a report as SVG.",
        """
        Points, plus overlays for the report: hulls and spanned lines of an
        avoiding pair, segments of a crossing family, or hulls of parts.
        """,
    )
    render.add_argument("--input", type=Path, required=True, help="point file")
    render.add_argument("--report", type=Path, help="report to draw")
    render.add_argument("--output", type=Path, required=True, help="SVG file")

    return parser


def setup_logging(verbose: bool, debug: bool) -> None:
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_time=False, show_path=debug)],
        force=True,
    )


def run_command(args: argparse.Namespace) -> None:
    if args.command == "gen":
        cli_gen(args.kind, args.n, args.dim, args.seed, args.delta, args.output)
    elif args.command == "find-avoiding":
        cli_find_avoiding(args.input, args.m, args.output)
    elif args.command == "find-crossing":
        cli_find_crossing(args.input, args.output)
    elif args.command == "fractional":
        cli_fractional(args.input, args.k, args.m, args.seed, args.exhaustive, args.output)
    elif args.command == "fractional-rd":
        cli_fractional_rd(args.input, args.k, args.k_prime, args.seed, args.output)
    elif args.command == "crossing-rd":
        cli_crossing_rd(args.input, args.output)
    elif args.command == "sametype-partition":
        cli_sametype_partition(args.input, args.k, args.output)
    elif args.command == "verify":
        cli_verify(args.input, args.report, args.exhaustive, args.trials, args.seed, args.output)
    elif args.command == "bench":
        cli_bench(args.specs, args.kind, args.n, args.dim, args.seeds, args.output)
    elif args.command == "render":
        cli_render(args.input, args.report, args.output)


def main() -> None:
    parser = build_parser()
    args = parser.parse_args()
    setup_logging(args.verbose, args.debug)
    load_dotenv_files()

    try:
        with settings_override(
            avoid_cap=args.cap,
            crossing_cap=args.cap,
            rd_avoid_cap=args.cap,
            trials=args.trials,
            seed=args.seed,
            threads=args.threads,
        ):
            run_command(args)
    except Exception as e:
        print_error(str(e))
        rprint("Use --verbose or --debug to see the full traceback.", style=STYLE_HINT)
        rprint()
        if args.verbose or args.debug:
            raise
        sys.exit(e.exit_code if isinstance(e, AvoidkitError) else 1)


if __name__ == "__main__":
    main()
