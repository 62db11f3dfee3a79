"""Scripted world fixtures with hand-verified decision outcomes."""

from __future__ import annotations

from .core import (
    BallState,
    PlayMode,
    PlayerState,
    Point2,
    Role,
    Side,
    TacticSet,
    TacticTarget,
    WorldState,
    make_world,
)

L = Side.LEFT
R = Side.RIGHT


def two_tactic_attack() -> tuple[WorldState, TacticSet]:
    """Mid-pitch attack with two desirable states and a split candidate set.

    The left holder (number 11, at (5,0)) has clear passing lanes to teammates
    7 (up-left) and 10 (down-right) and open dribbles except straight ahead
    and down-forward, which nearby opponents block. The tactic set offers a
    central attacking point up-field and a right-wing point near teammate 10.

    Hand-checked outcomes, reproduced by the test suite:
      - baseline mode picks the up-forward dribble (its endpoint has the
        largest x and the smallest goal distance of any candidate);
      - tactic mode picks the direct pass to 10 (resultant 1.41 m from the
        wing target, the global minimum);
      - the up-forward dribble and both passes to 7 partition to the central
        target, passes to 10 to the wing target.
    """
    left = [
        PlayerState(L, 1, Point2(-49.0, 0.0), Point2(0.0, 0.0), 0.0, Role.GOALKEEPER),
        PlayerState(L, 2, Point2(-38.0, 20.0), Point2(0.0, 0.0), 0.0, Role.DEFENDER),
        PlayerState(L, 3, Point2(-40.0, 7.0), Point2(0.0, 0.0), 0.0, Role.DEFENDER),
        PlayerState(L, 4, Point2(-40.0, -7.0), Point2(0.0, 0.0), 0.0, Role.DEFENDER),
        PlayerState(L, 5, Point2(-38.0, -20.0), Point2(0.0, 0.0), 0.0, Role.DEFENDER),
        PlayerState(L, 6, Point2(-30.0, 0.0), Point2(0.0, 0.0), 0.0, Role.MIDFIELDER),
        PlayerState(L, 7, Point2(-2.0, 14.0), Point2(0.0, 0.0), 0.0, Role.MIDFIELDER),
        PlayerState(L, 8, Point2(-28.0, -12.0), Point2(0.0, 0.0), 0.0, Role.MIDFIELDER),
        PlayerState(L, 9, Point2(-26.0, 6.0), Point2(0.0, 0.0), 0.0, Role.FORWARD),
        PlayerState(L, 10, Point2(3.0, -15.0), Point2(0.0, 0.0), 0.0, Role.FORWARD),
        PlayerState(L, 11, Point2(5.0, 0.0), Point2(0.0, 0.0), 0.0, Role.FORWARD),
    ]
    right = [
        PlayerState(R, 1, Point2(49.0, 0.0), Point2(0.0, 0.0), -180.0, Role.GOALKEEPER),
        PlayerState(R, 2, Point2(35.0, 18.0), Point2(0.0, 0.0), -180.0, Role.DEFENDER),
        PlayerState(R, 3, Point2(38.0, 6.0), Point2(0.0, 0.0), -180.0, Role.DEFENDER),
        PlayerState(R, 4, Point2(38.0, -6.0), Point2(0.0, 0.0), -180.0, Role.DEFENDER),
        PlayerState(R, 5, Point2(35.0, -18.0), Point2(0.0, 0.0), -180.0, Role.DEFENDER),
        # Marks the straight-ahead dribble lane.
        PlayerState(R, 6, Point2(10.0, 0.0), Point2(0.0, 0.0), -180.0, Role.MIDFIELDER),
        PlayerState(R, 7, Point2(25.0, 12.0), Point2(0.0, 0.0), -180.0, Role.MIDFIELDER),
        # Marks the down-forward dribble endpoint.
        PlayerState(R, 8, Point2(8.54, -3.54), Point2(0.0, 0.0), -180.0, Role.MIDFIELDER),
        PlayerState(R, 9, Point2(22.0, 0.0), Point2(0.0, 0.0), -180.0, Role.FORWARD),
        PlayerState(R, 10, Point2(24.0, -12.0), Point2(0.0, 0.0), -180.0, Role.FORWARD),
        PlayerState(R, 11, Point2(20.0, 8.0), Point2(0.0, 0.0), -180.0, Role.FORWARD),
    ]
    world = make_world(
        cycle=0,
        play_mode=PlayMode.PLAY_ON,
        ball=BallState(Point2(5.0, 0.0), Point2(0.0, 0.0)),
        players=left + right,
        holder=(L, 11),
    )
    tactics = TacticSet(
        targets=(
            TacticTarget("left-center-attack", Point2(15.0, 10.0)),
            TacticTarget("right-wing", Point2(4.0, -16.0)),
        )
    )
    return world, tactics
