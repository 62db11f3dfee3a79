"""Candidate actions for the ball holder, and predicted outcomes for all action kinds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .core import (
    DEFAULT_PITCH,
    Pitch,
    PlayerId,
    Point2,
    WorldState,
    clamp_to_pitch,
    dist_point_segment,
    euclidean,
    normalize_degrees,
    opponent_goal_center,
)


@dataclass(frozen=True, slots=True)
class DirectPass:
    receiver: PlayerId


@dataclass(frozen=True, slots=True)
class LeadPass:
    receiver: PlayerId
    lead_offset: Point2


@dataclass(frozen=True, slots=True)
class Dribble:
    direction: float
    distance: float

    def __post_init__(self) -> None:
        if self.distance <= 0:
            raise ValueError("dribble distance must be > 0")


@dataclass(frozen=True, slots=True)
class Shoot:
    pass


@dataclass(frozen=True, slots=True)
class Hold:
    pass


@dataclass(frozen=True, slots=True)
class Move:
    target: Point2


@dataclass(frozen=True, slots=True)
class Block:
    opponent: PlayerId


Action = Union[DirectPass, LeadPass, Dribble, Shoot, Hold, Move, Block]

#: Kinds the ball holder may choose; Move/Block belong to off-ball players.
BALL_ACTION_KINDS = (DirectPass, LeadPass, Dribble, Shoot, Hold)


@dataclass(frozen=True, slots=True)
class ResultantState:
    """Predicted outcome point of executing an action from a world state."""

    point: Point2
    actor: PlayerId
    action: Action


@dataclass(frozen=True, slots=True)
class ActionParams:
    pass_range: float = 30.0
    lane_clear_radius: float = 2.0
    #: Opponents this close to the lane origin are treated as shielded off
    #: the ball and do not block; without it a tight presser blocks every
    #: lane and play deadlocks.
    shield_radius: float = 1.5
    lead_distance: float = 5.0
    max_lead: float = 5.0
    dribble_distance: float = 5.0
    shoot_range: float = 25.0


DEFAULT_ACTION_PARAMS = ActionParams()

#: Canonical generation order for dribble directions, degrees in [-180, 180).
COMPASS_DEGREES = (0.0, 45.0, 90.0, 135.0, -180.0, -135.0, -90.0, -45.0)

_HALF_SQRT2 = math.sqrt(0.5)
# Exact unit vectors for the compass family, so mirrored worlds stay
# bit-identical (negation is exact, trig calls are not).
_COMPASS_UNIT = {
    0.0: (1.0, 0.0),
    45.0: (_HALF_SQRT2, _HALF_SQRT2),
    90.0: (0.0, 1.0),
    135.0: (-_HALF_SQRT2, _HALF_SQRT2),
    -180.0: (-1.0, 0.0),
    -135.0: (-_HALF_SQRT2, -_HALF_SQRT2),
    -90.0: (0.0, -1.0),
    -45.0: (_HALF_SQRT2, -_HALF_SQRT2),
}


def unit_from_degrees(deg: float) -> tuple[float, float]:
    d = normalize_degrees(deg)
    exact = _COMPASS_UNIT.get(d)
    if exact is not None:
        return exact
    r = math.radians(d)
    return (math.cos(r), math.sin(r))


def mirror_degrees(deg: float) -> float:
    """Direction of the x-mirrored ray (used by the side-swap symmetry harness)."""
    return normalize_degrees(180.0 - deg)


def lane_is_clear(
    world: WorldState,
    origin: Point2,
    target: Point2,
    opponent_side,
    clear_radius: float,
    ignore_within: float = 0.0,
) -> bool:
    """True if no player of ``opponent_side`` is within ``clear_radius`` of the
    origin-target segment.

    Opponents within ``ignore_within`` of the origin are contesting the ball
    itself, not covering a lane: they only block lanes aimed through them
    (within 45 degrees of their bearing). Without this a tight presser blocks
    every lane at once and the holder deadlocks.
    """
    ox, oy = origin.x, origin.y
    dx, dy = target.x - ox, target.y - oy
    lane_len = math.hypot(dx, dy)
    for opp in world.players_of(opponent_side):
        vx, vy = opp.position.x - ox, opp.position.y - oy
        if ignore_within > 0.0:
            d_o = math.hypot(vx, vy)
            if d_o <= ignore_within:
                if (
                    lane_len > 0.0
                    and d_o > 0.0
                    and dx * vx + dy * vy >= lane_len * d_o * _HALF_SQRT2
                ):
                    return False
                continue
        if dist_point_segment(opp.position, origin, target) <= clear_radius:
            return False
    return True


def generate_ball_candidates(
    world: WorldState,
    params: ActionParams = DEFAULT_ACTION_PARAMS,
    pitch: Pitch = DEFAULT_PITCH,
) -> list[Action]:
    """Deterministically ordered menu for the ball holder.

    Order: direct passes (receivers by number), lead passes (same order),
    open dribbles (compass order), a shot when in range, then Hold. The list
    is never empty because Hold is always appended.
    """
    if world.holder is None:
        raise ValueError("world has no ball holder; off-ball players use move candidates")
    side, number = world.holder
    holder = world.player(side, number)
    ball_pos = world.ball.position
    opponent = side.opponent

    reachable: list[int] = []
    for mate in world.players_of(side):
        if mate.number == number:
            continue
        if euclidean(ball_pos, mate.position) > params.pass_range:
            continue
        if lane_is_clear(
            world,
            ball_pos,
            mate.position,
            opponent,
            params.lane_clear_radius,
            params.shield_radius,
        ):
            reachable.append(mate.number)

    candidates: list[Action] = [DirectPass((side, n)) for n in reachable]
    lead = min(params.lead_distance, params.max_lead)
    lead_offset = Point2(side.attack_sign * lead, 0.0)
    candidates.extend(LeadPass((side, n), lead_offset) for n in reachable)

    for deg in COMPASS_DEGREES:
        ux, uy = unit_from_degrees(deg)
        end = Point2(
            holder.position.x + params.dribble_distance * ux,
            holder.position.y + params.dribble_distance * uy,
        )
        if lane_is_clear(
            world,
            holder.position,
            end,
            opponent,
            params.lane_clear_radius,
            params.shield_radius,
        ):
            candidates.append(Dribble(deg, params.dribble_distance))

    goal = opponent_goal_center(side, pitch)
    if euclidean(ball_pos, goal) <= params.shoot_range:
        candidates.append(Shoot())

    candidates.append(Hold())
    return candidates


def predict_result(
    world: WorldState,
    action: Action,
    actor: PlayerId | None = None,
    pitch: Pitch = DEFAULT_PITCH,
) -> ResultantState:
    """Resultant point of an action: where the ball (for ball actions) or the
    moving player's objective (for Move/Block) ends up. Pure and clamped to
    the pitch."""
    if actor is None:
        actor = world.holder
    if actor is None:
        raise ValueError("actor required: world has no holder to default to")
    side, number = actor
    if not 1 <= number <= 11:
        raise ValueError(f"actor number {number} outside 1..11")

    if isinstance(action, (DirectPass, LeadPass)):
        r_side, r_number = action.receiver
        if not 1 <= r_number <= 11:
            raise ValueError(f"receiver number {r_number} outside 1..11")
        receiver = world.player(r_side, r_number)
        point = receiver.position
        if isinstance(action, LeadPass):
            point = Point2(point.x + action.lead_offset.x, point.y + action.lead_offset.y)
    elif isinstance(action, Dribble):
        holder = world.player(side, number)
        ux, uy = unit_from_degrees(action.direction)
        point = Point2(
            holder.position.x + action.distance * ux,
            holder.position.y + action.distance * uy,
        )
    elif isinstance(action, Shoot):
        point = opponent_goal_center(side, pitch)
    elif isinstance(action, Hold):
        point = world.ball.position
    elif isinstance(action, Move):
        point = action.target
    elif isinstance(action, Block):
        o_side, o_number = action.opponent
        if not 1 <= o_number <= 11:
            raise ValueError(f"blocked opponent number {o_number} outside 1..11")
        opp = world.player(o_side, o_number)
        bp = world.ball.position
        point = Point2((opp.position.x + bp.x) / 2.0, (opp.position.y + bp.y) / 2.0)
    else:  # pragma: no cover - exhaustive over Action
        raise TypeError(f"unknown action type {type(action).__name__}")

    return ResultantState(point=clamp_to_pitch(point, pitch), actor=actor, action=action)
