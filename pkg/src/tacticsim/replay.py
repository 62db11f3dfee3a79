"""Match log serialization: verbose full logs, compact replays, and parsers.

Two line-oriented text formats, both LF-terminated, '.' decimal separator,
locale-independent:

Full log (`.fulllog`), one block per cycle::

    FULLLOG v1
    pitch <length> <width> <goal_width>      (4-decimal reals)
    team_left <name>
    team_right <name>
    seed <unsigned int>
    C <cycle> <play_mode> <score_l> <score_r> <bx> <by> <bvx> <bvy>
    P <L|R> <number> <x> <y> <vx> <vy> <body_dir>   (22 lines, left 1..11
                                                     then right 1..11)

Replay (`.replay`), one line per cycle, display fields only, 2-decimal::

    REPLAY v1
    pitch <length> <width>
    team_left <name>
    team_right <name>
    F <cycle> <score_l> <score_r> <bx> <by> <x y dir> * 22

Conversion from 4- to 2-decimal rounds half away from zero, applied to the
digit strings so no binary-float artifacts leak in.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, InvalidOperation, ROUND_HALF_UP
from typing import Iterable, TextIO

from .core import (
    BallState,
    Pitch,
    PlayMode,
    PlayerState,
    Point2,
    Role,
    Side,
    WorldState,
)
from .engine import MatchLog, MatchMeta

FULL_LOG_VERSION = "FULLLOG v1"
REPLAY_VERSION = "REPLAY v1"


class FormatError(ValueError):
    """Malformed log or replay text; pinpoints the first offending line."""

    def __init__(self, line_number: int, reason: str) -> None:
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}")


def _f4(v: float) -> str:
    s = f"{v:.4f}"
    return "0.0000" if s == "-0.0000" else s


def _f2(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _dir4(v: float) -> str:
    """Body direction at 4 decimals; 179.99996 rounds up to 180, which is the
    same heading as -180, so fold it back into [-180, 180)."""
    s = _f4(v)
    return "-180.0000" if s == "180.0000" else s


_TWO_PLACES = Decimal("0.01")


def _round2(token: str, line_number: int) -> str:
    """4-decimal digit string -> 2-decimal, ties away from zero."""
    try:
        q = Decimal(token).quantize(_TWO_PLACES, rounding=ROUND_HALF_UP)
    except InvalidOperation:
        raise FormatError(line_number, f"malformed number {token!r}") from None
    s = str(q)
    return "0.00" if s == "-0.00" else s


def full_log_lines(log: MatchLog) -> Iterable[str]:
    """The full-log document, one line at a time, without newlines."""
    meta = log.meta
    yield FULL_LOG_VERSION
    yield f"pitch {_f4(meta.pitch.length)} {_f4(meta.pitch.width)} {_f4(meta.pitch.goal_width)}"
    yield f"team_left {meta.team_left}"
    yield f"team_right {meta.team_right}"
    yield f"seed {meta.seed}"
    for frame in log.frames:
        b = frame.ball
        yield (
            f"C {frame.cycle} {frame.play_mode.value} "
            f"{frame.score_left} {frame.score_right} "
            f"{_f4(b.position.x)} {_f4(b.position.y)} "
            f"{_f4(b.velocity.x)} {_f4(b.velocity.y)}"
        )
        for p in frame.players:
            yield (
                f"P {p.side.value} {p.number} "
                f"{_f4(p.position.x)} {_f4(p.position.y)} "
                f"{_f4(p.velocity.x)} {_f4(p.velocity.y)} {_dir4(p.body_dir)}"
            )


def write_full_log(log: MatchLog, sink: TextIO) -> None:
    """Emit the full-log document to a text sink; LF endings, byte-stable."""
    for line in full_log_lines(log):
        sink.write(line)
        sink.write("\n")


def full_log_text(log: MatchLog) -> str:
    return "".join(line + "\n" for line in full_log_lines(log))


def _default_role(number: int) -> Role:
    if number == 1:
        return Role.GOALKEEPER
    if number <= 5:
        return Role.DEFENDER
    if number <= 8:
        return Role.MIDFIELDER
    return Role.FORWARD


def _parse_float(token: str, n: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise FormatError(n, f"malformed number {token!r}") from None


def _parse_int(token: str, n: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(n, f"malformed integer {token!r}") from None


def parse_full_log(text: str) -> MatchLog:
    """Inverse of write_full_log; writing the result back is byte-identical.

    Player roles and possession are not serialized; parsed frames carry
    number-derived roles and no holder.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != FULL_LOG_VERSION:
        raise FormatError(1, f"unsupported full log version (want {FULL_LOG_VERSION!r})")
    if len(lines) < 5:
        raise FormatError(len(lines), "truncated header")

    pitch_parts = lines[1].split()
    if len(pitch_parts) != 4 or pitch_parts[0] != "pitch":
        raise FormatError(2, "expected 'pitch <length> <width> <goal_width>'")
    pitch = Pitch(
        _parse_float(pitch_parts[1], 2),
        _parse_float(pitch_parts[2], 2),
        _parse_float(pitch_parts[3], 2),
    )
    team_names = []
    for offset, key in ((2, "team_left"), (3, "team_right")):
        head, _, name = lines[offset].partition(" ")
        if head != key or not name:
            raise FormatError(offset + 1, f"expected '{key} <name>'")
        team_names.append(name)
    seed_parts = lines[4].split()
    if len(seed_parts) != 2 or seed_parts[0] != "seed":
        raise FormatError(5, "expected 'seed <integer>'")
    seed = _parse_int(seed_parts[1], 5)

    frames: list[WorldState] = []
    i = 5
    while i < len(lines):
        n = i + 1
        parts = lines[i].split()
        if not parts or parts[0] != "C":
            raise FormatError(n, "expected a 'C' cycle line")
        if len(parts) != 9:
            raise FormatError(n, f"cycle line needs 9 fields, got {len(parts)}")
        cycle = _parse_int(parts[1], n)
        try:
            mode = PlayMode(parts[2])
        except ValueError:
            raise FormatError(n, f"unknown play mode {parts[2]!r}") from None
        score_l = _parse_int(parts[3], n)
        score_r = _parse_int(parts[4], n)
        ball = BallState(
            Point2(_parse_float(parts[5], n), _parse_float(parts[6], n)),
            Point2(_parse_float(parts[7], n), _parse_float(parts[8], n)),
        )
        players = []
        for k in range(22):
            j = i + 1 + k
            pn = j + 1
            if j >= len(lines):
                raise FormatError(len(lines), "truncated cycle block: expected 22 'P' lines")
            p_parts = lines[j].split()
            if len(p_parts) != 8 or p_parts[0] != "P":
                raise FormatError(pn, "expected a 'P' player line with 8 fields")
            try:
                side = Side(p_parts[1])
            except ValueError:
                raise FormatError(pn, f"unknown side {p_parts[1]!r}") from None
            number = _parse_int(p_parts[2], pn)
            try:
                players.append(
                    PlayerState(
                        side,
                        number,
                        Point2(_parse_float(p_parts[3], pn), _parse_float(p_parts[4], pn)),
                        Point2(_parse_float(p_parts[5], pn), _parse_float(p_parts[6], pn)),
                        _parse_float(p_parts[7], pn),
                        _default_role(number),
                    )
                )
            except ValueError as exc:
                raise FormatError(pn, str(exc)) from None
        try:
            frames.append(
                WorldState(
                    cycle=cycle,
                    play_mode=mode,
                    ball=ball,
                    players=tuple(players),
                    score_left=score_l,
                    score_right=score_r,
                )
            )
        except ValueError as exc:
            raise FormatError(n, str(exc)) from None
        i += 23

    meta = MatchMeta(pitch=pitch, team_left=team_names[0], team_right=team_names[1], seed=seed)
    try:
        return MatchLog(meta=meta, frames=tuple(frames))
    except ValueError as exc:
        raise FormatError(len(lines), str(exc)) from None


@dataclass(frozen=True, slots=True)
class ReplayFrame:
    cycle: int
    score_left: int
    score_right: int
    ball_x: float
    ball_y: float
    #: 22 (x, y, body_dir) triples, left team 1..11 then right team 1..11.
    players: tuple[tuple[float, float, float], ...]

    def __post_init__(self) -> None:
        if len(self.players) != 22:
            raise ValueError(f"expected 22 player triples, got {len(self.players)}")


@dataclass(frozen=True, slots=True)
class ReplayDocument:
    pitch_length: float
    pitch_width: float
    team_left: str
    team_right: str
    frames: tuple[ReplayFrame, ...]

    def __post_init__(self) -> None:
        if not self.frames:
            raise ValueError("a replay needs at least one frame")
        cycles = [f.cycle for f in self.frames]
        if any(b <= a for a, b in zip(cycles, cycles[1:])):
            raise ValueError("replay frames must strictly increase in cycle")


def convert_to_replay(full_log_text: str) -> str:
    """Project a full log down to its replay: drop play modes, velocities and
    the seed, round all reals to 2 decimals (ties away from zero)."""
    lines = full_log_text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != FULL_LOG_VERSION:
        raise FormatError(1, f"unsupported full log version (want {FULL_LOG_VERSION!r})")
    if len(lines) < 5:
        raise FormatError(len(lines), "truncated header")
    pitch_parts = lines[1].split()
    if len(pitch_parts) != 4 or pitch_parts[0] != "pitch":
        raise FormatError(2, "expected 'pitch <length> <width> <goal_width>'")
    for offset, key in ((2, "team_left"), (3, "team_right")):
        head, _, name = lines[offset].partition(" ")
        if head != key or not name:
            raise FormatError(offset + 1, f"expected '{key} <name>'")
    if not lines[4].startswith("seed "):
        raise FormatError(5, "expected 'seed <integer>'")

    out = [
        REPLAY_VERSION,
        f"pitch {_round2(pitch_parts[1], 2)} {_round2(pitch_parts[2], 2)}",
        lines[2],
        lines[3],
    ]
    i = 5
    while i < len(lines):
        n = i + 1
        parts = lines[i].split()
        if len(parts) != 9 or parts[0] != "C":
            raise FormatError(n, "expected a 'C' cycle line with 9 fields")
        _parse_int(parts[1], n)
        fields = [
            "F",
            parts[1],
            parts[3],
            parts[4],
            _round2(parts[5], n),
            _round2(parts[6], n),
        ]
        for k in range(22):
            j = i + 1 + k
            pn = j + 1
            if j >= len(lines):
                raise FormatError(len(lines), "truncated cycle block: expected 22 'P' lines")
            p_parts = lines[j].split()
            if len(p_parts) != 8 or p_parts[0] != "P":
                raise FormatError(pn, "expected a 'P' player line with 8 fields")
            fields.append(_round2(p_parts[3], pn))
            fields.append(_round2(p_parts[4], pn))
            fields.append(_round2(p_parts[7], pn))
        out.append(" ".join(fields))
        i += 23
    if len(out) == 4:
        raise FormatError(len(lines) + 1, "full log has no cycle blocks")
    return "".join(line + "\n" for line in out)


def serialize_replay(doc: ReplayDocument) -> str:
    """Canonical replay text; parse_replay of the result is the identity."""
    lines = [
        REPLAY_VERSION,
        f"pitch {_f2(doc.pitch_length)} {_f2(doc.pitch_width)}",
        f"team_left {doc.team_left}",
        f"team_right {doc.team_right}",
    ]
    for f in doc.frames:
        fields = [
            "F",
            str(f.cycle),
            str(f.score_left),
            str(f.score_right),
            _f2(f.ball_x),
            _f2(f.ball_y),
        ]
        for x, y, d in f.players:
            fields.append(_f2(x))
            fields.append(_f2(y))
            fields.append(_f2(d))
        lines.append(" ".join(fields))
    return "".join(line + "\n" for line in lines)


def parse_replay(text: str) -> ReplayDocument:
    """Parse replay text, or raise FormatError naming the offending line."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != REPLAY_VERSION:
        raise FormatError(1, f"unsupported replay version (want {REPLAY_VERSION!r})")
    if len(lines) < 5:
        raise FormatError(len(lines), "truncated header: need pitch, teams and one frame")
    pitch_parts = lines[1].split()
    if len(pitch_parts) != 3 or pitch_parts[0] != "pitch":
        raise FormatError(2, "expected 'pitch <length> <width>'")
    pitch_length = _parse_float(pitch_parts[1], 2)
    pitch_width = _parse_float(pitch_parts[2], 2)
    team_names = []
    for offset, key in ((2, "team_left"), (3, "team_right")):
        head, _, name = lines[offset].partition(" ")
        if head != key or not name:
            raise FormatError(offset + 1, f"expected '{key} <name>'")
        team_names.append(name)

    frames = []
    for i in range(4, len(lines)):
        n = i + 1
        parts = lines[i].split()
        if not parts or parts[0] != "F":
            raise FormatError(n, "expected an 'F' frame line")
        if len(parts) != 6 + 66 or (len(parts) - 6) % 3 != 0:
            got = (len(parts) - 6) / 3
            raise FormatError(n, f"expected 22 triples, got {got:g}")
        players = tuple(
            (
                _parse_float(parts[6 + 3 * k], n),
                _parse_float(parts[7 + 3 * k], n),
                _parse_float(parts[8 + 3 * k], n),
            )
            for k in range(22)
        )
        frames.append(
            ReplayFrame(
                cycle=_parse_int(parts[1], n),
                score_left=_parse_int(parts[2], n),
                score_right=_parse_int(parts[3], n),
                ball_x=_parse_float(parts[4], n),
                ball_y=_parse_float(parts[5], n),
                players=players,
            )
        )
    try:
        return ReplayDocument(
            pitch_length=pitch_length,
            pitch_width=pitch_width,
            team_left=team_names[0],
            team_right=team_names[1],
            frames=tuple(frames),
        )
    except ValueError as exc:
        raise FormatError(len(lines), str(exc)) from None
