"""Command line front door: play matches, run series, tabulate standings,
and convert logs to replays.

Exit codes: 0 success, 2 usage error, 3 malformed input document, 4 engine
failure while simulating.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import PRESET_NAMES, ConfigError, parse_single_team, team_preset
from .engine import MatchConfig, TeamConfig, play_match
from .replay import FormatError, convert_to_replay, full_log_text
from .tournament import (
    compute_standings,
    read_match_rows,
    run_series,
    series_report,
    standings_table,
)

EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_ENGINE = 4


def load_team(spec: str) -> TeamConfig:
    """A team from a preset name ('tactics', 'baseline') or a config file."""
    if spec in PRESET_NAMES:
        return team_preset(spec)
    return parse_single_team(Path(spec).read_text(encoding="utf-8"))


def _cmd_match(args: argparse.Namespace) -> int:
    config = MatchConfig(
        team_left=load_team(args.team_a),
        team_right=load_team(args.team_b),
        cycles=args.cycles,
        seed=args.seed,
        noise_scale=args.noise,
    )
    result = play_match(config)
    text = full_log_text(result.log)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.replay:
        Path(args.replay).write_text(convert_to_replay(text), encoding="utf-8")
    print(
        f"{config.team_left.name} {result.score_left}:{result.score_right} "
        f"{config.team_right.name}"
    )
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    team_a = load_team(args.team_a)
    team_b = load_team(args.team_b)
    stats = run_series(
        team_a,
        team_b,
        args.n,
        args.seed,
        cycles=args.cycles,
        noise_scale=args.noise,
    )
    report = series_report(stats, team_a.name, team_b.name, args.seed)
    if args.out:
        Path(args.out).write_text(report, encoding="utf-8")
    else:
        sys.stdout.write(report)
    return 0


def _cmd_standings(args: argparse.Namespace) -> int:
    rows = read_match_rows(Path(args.infile).read_text(encoding="utf-8"))
    sys.stdout.write(standings_table(compute_standings(rows)))
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    replay = convert_to_replay(Path(args.infile).read_text(encoding="utf-8"))
    if args.out:
        Path(args.out).write_text(replay, encoding="utf-8")
    else:
        sys.stdout.write(replay)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tacticsim",
        description="Deterministic 2D soccer simulation and evaluation benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_teams(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--team-a",
            required=True,
            help="left team: preset name (tactics, baseline) or config file",
        )
        p.add_argument("--team-b", required=True, help="right team: same forms")
        p.add_argument("--seed", type=int, default=0, help="base random seed")
        p.add_argument(
            "--noise", type=float, default=0.05, help="kick direction noise (radians)"
        )

    p_match = sub.add_parser("match", help="play one match and write its full log")
    add_teams(p_match)
    p_match.add_argument("--cycles", type=int, default=6000)
    p_match.add_argument("--out", help="full log output path")
    p_match.add_argument("--replay", help="also write the converted replay here")
    p_match.set_defaults(func=_cmd_match)

    p_series = sub.add_parser("series", help="play a seeded series and report stats")
    add_teams(p_series)
    p_series.add_argument("--n", type=int, default=100, help="number of matches")
    p_series.add_argument("--cycles", type=int, default=3000)
    p_series.add_argument("--out", help="report output path (default: stdout)")
    p_series.set_defaults(func=_cmd_series)

    p_standings = sub.add_parser("standings", help="tabulate a results CSV")
    p_standings.add_argument(
        "--in", dest="infile", required=True, help="team_a,team_b,score_a,score_b rows"
    )
    p_standings.set_defaults(func=_cmd_standings)

    p_convert = sub.add_parser("convert", help="convert a full log to a replay")
    p_convert.add_argument("--in", dest="infile", required=True, help="full log path")
    p_convert.add_argument("--out", help="replay output path (default: stdout)")
    p_convert.set_defaults(func=_cmd_convert)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"engine error: {exc}", file=sys.stderr)
        return EXIT_ENGINE


if __name__ == "__main__":
    sys.exit(main())
