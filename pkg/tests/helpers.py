"""Shared builders for randomized test worlds."""

from __future__ import annotations

import random

from tacticsim.actions import (
    Block,
    DirectPass,
    Dribble,
    Hold,
    LeadPass,
    Move,
    Shoot,
    mirror_degrees,
)
from tacticsim.core import (
    DEFAULT_PITCH,
    BallState,
    PlayMode,
    PlayerId,
    PlayerState,
    Point2,
    Role,
    Side,
    WorldState,
    mirror_point,
)


def role_of(number: int) -> Role:
    if number == 1:
        return Role.GOALKEEPER
    if number <= 5:
        return Role.DEFENDER
    if number <= 8:
        return Role.MIDFIELDER
    return Role.FORWARD


def random_world(
    rng: random.Random,
    holder: PlayerId | None = None,
    pitch=DEFAULT_PITCH,
    margin: float = 0.5,
) -> WorldState:
    """A valid random world; when a holder is given the ball sits at their feet."""
    hx = pitch.half_length - margin
    hy = pitch.half_width - margin
    players = []
    for side in (Side.LEFT, Side.RIGHT):
        for number in range(1, 12):
            players.append(
                PlayerState(
                    side,
                    number,
                    Point2(rng.uniform(-hx, hx), rng.uniform(-hy, hy)),
                    Point2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)),
                    rng.uniform(-180.0, 179.0),
                    role_of(number),
                )
            )
    if holder is not None:
        idx = (0 if holder[0] is Side.LEFT else 11) + holder[1] - 1
        ball_pos = players[idx].position
        ball = BallState(ball_pos, Point2(0.0, 0.0))
    else:
        ball = BallState(
            Point2(rng.uniform(-hx, hx), rng.uniform(-hy, hy)),
            Point2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)),
        )
    return WorldState(
        cycle=rng.randrange(0, 6000),
        play_mode=PlayMode.PLAY_ON,
        ball=ball,
        players=tuple(players),
        score_left=rng.randrange(0, 5),
        score_right=rng.randrange(0, 5),
        holder=holder,
    )


def mirror_action(action):
    """The action the mirrored actor would take in the mirrored world."""
    if isinstance(action, DirectPass):
        return DirectPass((action.receiver[0].opponent, action.receiver[1]))
    if isinstance(action, LeadPass):
        return LeadPass(
            (action.receiver[0].opponent, action.receiver[1]),
            mirror_point(action.lead_offset),
        )
    if isinstance(action, Dribble):
        return Dribble(mirror_degrees(action.direction), action.distance)
    if isinstance(action, Move):
        return Move(mirror_point(action.target))
    if isinstance(action, Block):
        return Block((action.opponent[0].opponent, action.opponent[1]))
    if isinstance(action, (Shoot, Hold)):
        return action
    raise TypeError(f"unknown action {action!r}")
