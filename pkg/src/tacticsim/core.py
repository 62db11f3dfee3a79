"""Immutable world-state and geometry primitives shared by every engine layer."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class Side(Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def opponent(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT

    @property
    def attack_sign(self) -> float:
        """+1 if this side attacks toward +x, else -1."""
        return 1.0 if self is Side.LEFT else -1.0


class Role(Enum):
    GOALKEEPER = "GK"
    DEFENDER = "DF"
    MIDFIELDER = "MF"
    FORWARD = "FW"


class PlayMode(Enum):
    KICKOFF_LEFT = "kickoff_left"
    KICKOFF_RIGHT = "kickoff_right"
    PLAY_ON = "play_on"
    GOAL_LEFT = "goal_left"
    GOAL_RIGHT = "goal_right"
    OUT_OF_PLAY = "out_of_play"


# (side, shirt number) pair identifying one of the 22 players.
PlayerId = tuple[Side, int]


@dataclass(frozen=True, slots=True)
class Point2:
    """A point in the pitch frame: origin at center, +x toward the right goal,
    +y toward the top touchline, units in meters."""

    x: float
    y: float


@dataclass(frozen=True, slots=True)
class Pitch:
    length: float
    width: float
    goal_width: float

    def __post_init__(self) -> None:
        if self.length <= 0 or self.width <= 0:
            raise ValueError(f"pitch dimensions must be positive, got {self.length}x{self.width}")
        if not 0 < self.goal_width < self.width:
            raise ValueError(f"goal width {self.goal_width} must lie in (0, {self.width})")

    @property
    def half_length(self) -> float:
        return self.length / 2.0

    @property
    def half_width(self) -> float:
        return self.width / 2.0


#: Soccer-server style dimensions used everywhere a pitch is not supplied.
DEFAULT_PITCH = Pitch(length=105.0, width=68.0, goal_width=14.02)


@dataclass(frozen=True, slots=True)
class PlayerState:
    side: Side
    number: int
    position: Point2
    velocity: Point2
    body_dir: float
    role: Role

    def __post_init__(self) -> None:
        if not 1 <= self.number <= 11:
            raise ValueError(f"player number {self.number} outside 1..11")
        if not -180.0 <= self.body_dir < 180.0:
            raise ValueError(f"body_dir {self.body_dir} outside [-180, 180)")


@dataclass(frozen=True, slots=True)
class BallState:
    position: Point2
    velocity: Point2


@dataclass(frozen=True, slots=True)
class WorldState:
    """Snapshot of one simulation cycle.

    ``players`` is kept in canonical order (left 1..11 then right 1..11) so
    lookups are O(1) and serialized output is stable. Use :func:`make_world`
    to build one from an arbitrarily ordered roster.
    """

    cycle: int
    play_mode: PlayMode
    ball: BallState
    players: tuple[PlayerState, ...]
    score_left: int
    score_right: int
    holder: PlayerId | None = None

    def __post_init__(self) -> None:
        if self.cycle < 0:
            raise ValueError("cycle must be >= 0")
        if self.score_left < 0 or self.score_right < 0:
            raise ValueError("scores must be >= 0")
        if len(self.players) != 22:
            raise ValueError(f"roster must contain exactly 22 players, got {len(self.players)}")
        for i, p in enumerate(self.players):
            want_side = Side.LEFT if i < 11 else Side.RIGHT
            want_number = (i % 11) + 1
            if p.side is not want_side or p.number != want_number:
                raise ValueError(
                    "players must be in canonical order (left 1..11 then right 1..11); "
                    f"slot {i} holds {p.side.name} #{p.number}"
                )
        if self.holder is not None:
            side, number = self.holder
            if not 1 <= number <= 11:
                raise ValueError(f"holder number {number} outside 1..11")
            if not isinstance(side, Side):
                raise ValueError("holder side must be a Side")

    def player(self, side: Side, number: int) -> PlayerState:
        idx = (0 if side is Side.LEFT else 11) + number - 1
        return self.players[idx]

    def players_of(self, side: Side) -> tuple[PlayerState, ...]:
        return self.players[:11] if side is Side.LEFT else self.players[11:]

    def holder_player(self) -> PlayerState | None:
        if self.holder is None:
            return None
        return self.player(*self.holder)


def make_world(
    cycle: int,
    play_mode: PlayMode,
    ball: BallState,
    players: list[PlayerState] | tuple[PlayerState, ...],
    score_left: int = 0,
    score_right: int = 0,
    holder: PlayerId | None = None,
) -> WorldState:
    """Build a WorldState from an arbitrarily ordered roster.

    Raises ValueError if the roster is not exactly 11 players per side with
    numbers 1..11 once per side.
    """
    by_slot: dict[tuple[Side, int], PlayerState] = {}
    for p in players:
        key = (p.side, p.number)
        if key in by_slot:
            raise ValueError(f"duplicate player {p.side.name} #{p.number}")
        by_slot[key] = p
    ordered = []
    for side in (Side.LEFT, Side.RIGHT):
        for number in range(1, 12):
            try:
                ordered.append(by_slot.pop((side, number)))
            except KeyError:
                raise ValueError(f"roster missing {side.name} #{number}") from None
    return WorldState(
        cycle=cycle,
        play_mode=play_mode,
        ball=ball,
        players=tuple(ordered),
        score_left=score_left,
        score_right=score_right,
        holder=holder,
    )


@dataclass(frozen=True, slots=True)
class TacticTarget:
    """A labeled desirable state: the point one tactic proposes to reach."""

    label: str
    point: Point2


@dataclass(frozen=True, slots=True)
class TacticSet:
    """The m tactic targets active for one decision; candidate actions are
    partitioned across them."""

    targets: tuple[TacticTarget, ...]

    def __post_init__(self) -> None:
        if not self.targets:
            raise ValueError("a tactic set needs at least one target")
        labels = [t.label for t in self.targets]
        if len(set(labels)) != len(labels):
            raise ValueError(f"tactic labels must be unique, got {labels}")

    def __len__(self) -> int:
        return len(self.targets)


def euclidean(p: Point2, q: Point2) -> float:
    """Planar distance between two points; the uniform metric used by every
    rating in the evaluation layer."""
    return math.hypot(p.x - q.x, p.y - q.y)


def clamp_to_pitch(p: Point2, pitch: Pitch = DEFAULT_PITCH) -> Point2:
    hx, hy = pitch.half_length, pitch.half_width
    x = hx if p.x > hx else (-hx if p.x < -hx else p.x)
    y = hy if p.y > hy else (-hy if p.y < -hy else p.y)
    if x == p.x and y == p.y:
        return p
    return Point2(x, y)


def opponent_goal_center(side: Side, pitch: Pitch = DEFAULT_PITCH) -> Point2:
    """Center of the goal the given side attacks."""
    return Point2(side.attack_sign * pitch.half_length, 0.0)


def normalize_degrees(deg: float) -> float:
    """Fold an angle into [-180, 180)."""
    d = math.fmod(deg, 360.0)
    if d < -180.0:
        d += 360.0
    elif d >= 180.0:
        d -= 360.0
    return d


def mirror_point(p: Point2) -> Point2:
    """The x-flipped twin of a point, the pitch frame's left-right symmetry.
    Pure negation, so mirrored coordinates are bit-exact."""
    return Point2(-p.x, p.y)


_MIRROR_MODE = {
    PlayMode.KICKOFF_LEFT: PlayMode.KICKOFF_RIGHT,
    PlayMode.KICKOFF_RIGHT: PlayMode.KICKOFF_LEFT,
    PlayMode.GOAL_LEFT: PlayMode.GOAL_RIGHT,
    PlayMode.GOAL_RIGHT: PlayMode.GOAL_LEFT,
}


def mirror_world(world: WorldState) -> WorldState:
    """The side-swapped twin world: positions and velocities x-negated,
    headings reflected, rosters exchanged between sides, scores swapped."""

    def flip(p: PlayerState) -> PlayerState:
        return PlayerState(
            side=p.side.opponent,
            number=p.number,
            position=mirror_point(p.position),
            velocity=mirror_point(p.velocity),
            body_dir=normalize_degrees(180.0 - p.body_dir),
            role=p.role,
        )

    left = [flip(p) for p in world.players if p.side is Side.RIGHT]
    right = [flip(p) for p in world.players if p.side is Side.LEFT]
    holder = world.holder
    if holder is not None:
        holder = (holder[0].opponent, holder[1])
    return WorldState(
        cycle=world.cycle,
        play_mode=_MIRROR_MODE.get(world.play_mode, world.play_mode),
        ball=BallState(mirror_point(world.ball.position), mirror_point(world.ball.velocity)),
        players=tuple(left + right),
        score_left=world.score_right,
        score_right=world.score_left,
        holder=holder,
    )


def dist_point_segment(p: Point2, a: Point2, b: Point2) -> float:
    """Distance from p to the closed segment a-b."""
    ax, ay = a.x, a.y
    dx, dy = b.x - ax, b.y - ay
    seg2 = dx * dx + dy * dy
    if seg2 == 0.0:
        return math.hypot(p.x - ax, p.y - ay)
    t = ((p.x - ax) * dx + (p.y - ay) * dy) / seg2
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return math.hypot(p.x - (ax + t * dx), p.y - (ay + t * dy))
