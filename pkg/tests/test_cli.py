import sys
from pathlib import Path

import pytest

from avoidkit.cli import cli_main
from avoidkit.cli.cli_main import build_parser, main
from avoidkit.errors import CapExceeded, ParseError
from avoidkit.geometry.geom_types import PointSeq
from avoidkit.toolkit.point_io import read_points, write_points
from avoidkit.toolkit.reports import read_report


@pytest.fixture(autouse=True)
def in_tmp(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    monkeypatch.chdir(tmp_path)
    for var in ("AVOIDKIT_THREADS", "AVOIDKIT_CONFIG", "AVOIDKIT_SEED"):
        monkeypatch.delenv(var, raising=False)


def run(monkeypatch: pytest.MonkeyPatch, *args: str) -> None:
    monkeypatch.setattr(sys, "argv", ["avoidkit", *args])
    main()


def exit_code(monkeypatch: pytest.MonkeyPatch, *args: str) -> int | str | None:
    with pytest.raises(SystemExit) as info:
        run(monkeypatch, *args)
    return info.value.code


def test_parser_defaults() -> None:
    args = build_parser().parse_args(["fractional", "--input", "p.txt"])
    assert (args.k, args.m, args.exhaustive, args.cap, args.seed) == (2, 9, False, None, None)

    args = build_parser().parse_args(["bench", "--output", "b.csv"])
    assert args.n == [12, 48, 108]
    assert args.seeds == 5

    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_help_lists_commands() -> None:
    help_text = build_parser().format_help()
    for command in ("gen", "find-avoiding", "crossing-rd", "sametype-partition", "verify", "render"):
        assert command in help_text


def test_gen_to_stdout(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    run(monkeypatch, "gen", "--kind", "moment_curve", "--n", "4")
    assert capsys.readouterr().out == "2 4\n1 1\n2 4\n3 9\n4 16\n"


def test_gen_is_deterministic(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    run(monkeypatch, "gen", "--n", "20", "--seed", "9", "--output", "a.txt")
    run(monkeypatch, "gen", "--n", "20", "--seed", "9", "--output", "b.txt")
    assert (tmp_path / "a.txt").read_bytes() == (tmp_path / "b.txt").read_bytes()
    assert len(read_points(tmp_path / "a.txt")) == 20


def test_find_and_verify(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    run(monkeypatch, "gen", "--n", "12", "--seed", "3", "--output", "p.txt")
    run(monkeypatch, "find-avoiding", "--input", "p.txt", "--output", "pair.txt")
    pair = read_report(tmp_path / "pair.txt")
    assert pair.kind == "avoiding_pair"
    assert pair.get("method") == "oracle"
    assert pair.get("meets_bound") == "true"

    run(monkeypatch, "verify", "--input", "p.txt", "--report", "pair.txt", "--output", "check.txt")
    check = read_report(tmp_path / "check.txt")
    assert (check.get("claim"), check.get("ok")) == ("avoiding_pair", "true")

    run(monkeypatch, "find-crossing", "--input", "p.txt", "--output", "cross.txt")
    run(monkeypatch, "verify", "--input", "p.txt", "--report", "cross.txt")
    run(monkeypatch, "render", "--input", "p.txt", "--report", "pair.txt", "--output", "pair.svg")
    assert "<polygon" in (tmp_path / "pair.svg").read_text()


def test_verify_rejects_false_claim(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    write_points(PointSeq.of([(0, 0), (1, 1), (1, 0), (0, 1)]), tmp_path / "square.txt")
    (tmp_path / "claim.txt").write_text("kind=avoiding_pair\na=0,1\nb=2,3\n")
    code = exit_code(monkeypatch, "verify", "--input", "square.txt", "--report", "claim.txt")
    assert code == 1


def test_fractional_and_render(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    xs = range(-12, 13)
    P = PointSeq.of([(x, x * x) for x in xs] + [(x, 10**6 - x * x) for x in xs])
    write_points(P, tmp_path / "clusters.txt")

    run(monkeypatch, "fractional", "--input", "clusters.txt", "--output", "frac.txt", "--seed", "1")
    report = read_report(tmp_path / "frac.txt")
    assert report.get("verified") == "true"
    assert report.get("crossing_variant") == "true"
    assert report.get("part_sizes") == "3,3,3,3"

    run(monkeypatch, "verify", "--input", "clusters.txt", "--report", "frac.txt", "--exhaustive")
    run(monkeypatch, "render", "--input", "clusters.txt", "--report", "frac.txt", "--output", "frac.svg")
    assert (tmp_path / "frac.svg").read_text().count("<polygon") >= 4


def test_space_commands(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    run(monkeypatch, "gen", "--kind", "moment_curve", "--n", "16", "--dim", "3", "--output", "m16.txt")
    run(monkeypatch, "sametype-partition", "--input", "m16.txt", "--k", "4", "--output", "parts.txt")
    parts = read_report(tmp_path / "parts.txt")
    assert parts.get("sizes") == "4,4,4,4"
    assert parts.get("fallback") == "false"
    run(monkeypatch, "verify", "--input", "m16.txt", "--report", "parts.txt")

    run(monkeypatch, "gen", "--kind", "moment_curve", "--n", "12", "--dim", "3", "--output", "m.txt")
    run(monkeypatch, "crossing-rd", "--input", "m.txt", "--output", "rd.txt")
    rd = read_report(tmp_path / "rd.txt")
    assert rd.get("verified") == "true"
    run(monkeypatch, "verify", "--input", "m.txt", "--report", "rd.txt")

    assert exit_code(monkeypatch, "render", "--input", "m.txt", "--output", "m.svg") == 2


def test_bench(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    run(monkeypatch, "bench", "--n", "6", "12", "--seeds", "2", "--output", "bench.csv", "--threads", "2")
    lines = (tmp_path / "bench.csv").read_text().splitlines()
    assert lines[0] == "# format=1"
    assert len(lines) == 2 + 4


def test_input_errors(monkeypatch: pytest.MonkeyPatch) -> None:
    assert exit_code(monkeypatch, "find-avoiding", "--input", "missing.txt") == 2
    assert exit_code(monkeypatch, "gen", "--n", "0") == 2
    assert exit_code(monkeypatch, "gen", "--n", "5", "--delta", "x/y") == 2
    assert exit_code(monkeypatch, "gen", "--n", "5", "--trials", "0") == 2


def test_verbose_reraises(monkeypatch: pytest.MonkeyPatch) -> None:
    with pytest.raises(ParseError):
        run(monkeypatch, "find-avoiding", "--input", "missing.txt", "--verbose")


def test_cap_exit_code(monkeypatch: pytest.MonkeyPatch) -> None:
    def over_cap(args: object) -> None:
        raise CapExceeded("too many points")

    monkeypatch.setattr(cli_main, "run_command", over_cap)
    assert exit_code(monkeypatch, "find-crossing", "--input", "p.txt") == 3


def test_collinear_input_rejected(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    (tmp_path / "line.txt").write_text("2 5\n0 0\n1 1\n2 2\n5 1\n3 7\n")
    assert exit_code(monkeypatch, "find-avoiding", "--input", "line.txt") == 2
    assert exit_code(monkeypatch, "fractional", "--input", "line.txt", "--k", "1", "--m", "5") == 2
