"""Seeded match series with aggregate statistics, and round-robin standings.

A series plays n matches between two team configurations with consecutive
seeds and reports the goal-difference distribution from team A's point of
view. Standings aggregate `team_a,team_b,score_a,score_b` result rows into a
group table ordered by points, goal difference, goals for, then name.
"""

from __future__ import annotations

import csv
import io
import statistics
from dataclasses import dataclass
from typing import Iterable

from .engine import MatchConfig, TeamConfig, play_match_scores
from .replay import FormatError

#: Normal-approximation 95% interval half-width multiplier.
Z_95 = 1.96


@dataclass(frozen=True, slots=True)
class SeriesStats:
    """Aggregate of an n-match series, team A minus team B."""

    n: int
    wins: int
    draws: int
    losses: int
    mean_goal_diff: float
    std_dev: float
    ci95_low: float
    ci95_high: float

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"series size must be >= 1, got {self.n}")
        if self.wins + self.draws + self.losses != self.n:
            raise ValueError(
                f"wins {self.wins} + draws {self.draws} + losses {self.losses} != n {self.n}"
            )
        if not self.ci95_low <= self.mean_goal_diff <= self.ci95_high:
            raise ValueError("confidence interval does not bracket the mean")


def aggregate_scores(pairs: Iterable[tuple[int, int]]) -> SeriesStats:
    """SeriesStats for a sequence of (score_a, score_b) match results."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("cannot aggregate an empty series")
    diffs = [a - b for a, b in pairs]
    mean = statistics.fmean(diffs)
    std = statistics.pstdev(diffs)
    half = Z_95 * std / len(diffs) ** 0.5
    return SeriesStats(
        n=len(diffs),
        wins=sum(d > 0 for d in diffs),
        draws=sum(d == 0 for d in diffs),
        losses=sum(d < 0 for d in diffs),
        mean_goal_diff=mean,
        std_dev=std,
        ci95_low=mean - half,
        ci95_high=mean + half,
    )


def run_series(
    config_a: TeamConfig,
    config_b: TeamConfig,
    n: int,
    base_seed: int,
    *,
    cycles: int = 3000,
    noise_scale: float = 0.05,
) -> SeriesStats:
    """Play n matches, team A on the left, seeds base_seed..base_seed+n-1.

    Deterministic for fixed arguments. The first engine error aborts the
    whole series and propagates.
    """
    if n < 1:
        raise ValueError(f"series size must be >= 1, got {n}")
    pairs = []
    for i in range(n):
        config = MatchConfig(
            team_left=config_a,
            team_right=config_b,
            cycles=cycles,
            seed=base_seed + i,
            noise_scale=noise_scale,
        )
        pairs.append(play_match_scores(config))
    return aggregate_scores(pairs)


def series_report(
    stats: SeriesStats, team_a: str, team_b: str, base_seed: int
) -> str:
    """Plain-text series summary; byte-identical for identical inputs."""
    return (
        "series report\n"
        f"team_a {team_a}\n"
        f"team_b {team_b}\n"
        f"matches {stats.n}\n"
        f"base_seed {base_seed}\n"
        f"wins {stats.wins}\n"
        f"draws {stats.draws}\n"
        f"losses {stats.losses}\n"
        f"mean_goal_diff {stats.mean_goal_diff:+.4f}\n"
        f"std_dev {stats.std_dev:.4f}\n"
        f"ci95_low {stats.ci95_low:+.4f}\n"
        f"ci95_high {stats.ci95_high:+.4f}\n"
    )


def points_of(wins: int, draws: int) -> int:
    """Group points: three per win, one per draw."""
    if wins < 0 or draws < 0:
        raise ValueError(f"negative record ({wins} wins, {draws} draws)")
    return 3 * wins + draws


@dataclass(frozen=True, slots=True)
class MatchRow:
    """One finished match between named teams, read from a results file."""

    team_a: str
    team_b: str
    score_a: int
    score_b: int

    def __post_init__(self) -> None:
        if not self.team_a or not self.team_b:
            raise ValueError("team names must be nonempty")
        if self.team_a == self.team_b:
            raise ValueError(f"team {self.team_a!r} cannot play itself")
        if self.score_a < 0 or self.score_b < 0:
            raise ValueError(f"negative score {self.score_a}:{self.score_b}")


@dataclass(frozen=True, slots=True)
class GroupRecord:
    """One team's line in a group table."""

    team: str
    played: int
    wins: int
    draws: int
    losses: int
    goals_for: int
    goals_against: int
    points: int

    def __post_init__(self) -> None:
        if self.played != self.wins + self.draws + self.losses:
            raise ValueError("played must equal wins + draws + losses")
        if self.points != points_of(self.wins, self.draws):
            raise ValueError("points must equal 3*wins + draws")

    @property
    def goal_diff(self) -> int:
        return self.goals_for - self.goals_against


def compute_standings(
    rows: Iterable[MatchRow], teams: Iterable[str] = ()
) -> tuple[GroupRecord, ...]:
    """Group table from result rows: points desc, goal difference desc,
    goals for desc, name asc. `teams` adds entries that may have no rows."""
    tally: dict[str, list[int]] = {}  # w, d, l, gf, ga

    def entry(team: str) -> list[int]:
        return tally.setdefault(team, [0, 0, 0, 0, 0])

    for team in teams:
        entry(team)
    for row in rows:
        if row.team_a == row.team_b:
            raise ValueError(f"team {row.team_a!r} cannot play itself")
        a, b = entry(row.team_a), entry(row.team_b)
        a[3] += row.score_a
        a[4] += row.score_b
        b[3] += row.score_b
        b[4] += row.score_a
        if row.score_a > row.score_b:
            a[0] += 1
            b[2] += 1
        elif row.score_a < row.score_b:
            a[2] += 1
            b[0] += 1
        else:
            a[1] += 1
            b[1] += 1

    records = [
        GroupRecord(
            team=team,
            played=w + d + l,
            wins=w,
            draws=d,
            losses=l,
            goals_for=gf,
            goals_against=ga,
            points=points_of(w, d),
        )
        for team, (w, d, l, gf, ga) in tally.items()
    ]
    records.sort(key=lambda r: (-r.points, -r.goal_diff, -r.goals_for, r.team))
    return tuple(records)


def read_match_rows(text: str) -> tuple[MatchRow, ...]:
    """Parse `team_a,team_b,score_a,score_b` rows; blank lines are skipped."""
    rows = []
    for n, record in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not record:
            continue
        if len(record) != 4:
            raise FormatError(n, f"expected 4 comma-separated fields, got {len(record)}")
        a, b, raw_sa, raw_sb = (f.strip() for f in record)
        try:
            sa, sb = int(raw_sa), int(raw_sb)
        except ValueError:
            raise FormatError(n, f"malformed score {raw_sa!r}:{raw_sb!r}") from None
        try:
            rows.append(MatchRow(team_a=a, team_b=b, score_a=sa, score_b=sb))
        except ValueError as exc:
            raise FormatError(n, str(exc)) from None
    return tuple(rows)


def standings_table(records: Iterable[GroupRecord]) -> str:
    """Fixed-width standings text, one line per record in the given order."""
    records = list(records)
    name_w = max([len(r.team) for r in records] + [4])
    lines = [f"{'team':<{name_w}}  points  score  W  D  L"]
    for r in records:
        score = f"{r.goals_for}:{r.goals_against}"
        lines.append(
            f"{r.team:<{name_w}}  {r.points:>6}  {score:>5}  {r.wins}  {r.draws}  {r.losses}"
        )
    return "".join(line + "\n" for line in lines)
