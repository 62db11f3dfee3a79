"""Action rating and selection.

Two evaluators share one shape: predict an action's resultant point, measure
its distance to a desirable state, pick the argmin. The baseline evaluator
always measures against the opponent goal; the tactic evaluator first assigns
each action to the nearest of several desirable states, partitioning the
candidate set, and measures against the assigned one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .actions import (
    Action,
    ActionParams,
    DEFAULT_ACTION_PARAMS,
    ResultantState,
    generate_ball_candidates,
    predict_result,
)
from .core import (
    DEFAULT_PITCH,
    Pitch,
    PlayerId,
    Point2,
    Side,
    TacticSet,
    TacticTarget,
    WorldState,
    euclidean,
    opponent_goal_center,
)
from .field_control import (
    DEFAULT_POSITIONING_PARAMS,
    PositioningParams,
    VoronoiDiagram,
    positioning_targets,
)


class EvalMode(enum.Enum):
    BASELINE = "baseline"
    TACTICS = "tactics"


@dataclass(frozen=True, slots=True)
class RatedAction:
    """An action, its predicted resultant, the desirable state it was measured
    against, and the distance between the two (lower is better)."""

    action: Action
    resultant: ResultantState
    target: TacticTarget
    rating: float


def rate_baseline(
    world: WorldState,
    action: Action,
    actor: PlayerId | None = None,
    pitch: Pitch = DEFAULT_PITCH,
    x_weight: float = 0.0,
) -> RatedAction:
    """Rate an action by its resultant's distance to the opponent goal.

    ``x_weight`` enables an optional variant that also credits field progress
    (subtracting weighted attacking-direction x). Disabled by default, which
    keeps the rating equal to the plain goal distance.
    """
    resultant = predict_result(world, action, actor, pitch)
    side = resultant.actor[0]
    goal = opponent_goal_center(side, pitch)
    rating = euclidean(resultant.point, goal)
    if x_weight != 0.0:
        rating -= x_weight * side.attack_sign * resultant.point.x
    return RatedAction(action, resultant, TacticTarget("goal", goal), rating)


def assign_tactic(
    action: Action, resultant: ResultantState, tactics: TacticSet
) -> TacticTarget:
    """Map an action to the tactic target nearest its resultant point.

    Applied across a candidate list this induces a partition into m sets, one
    per target. Ties go to the lower target index.
    """
    best = tactics.targets[0]
    best_d = euclidean(resultant.point, best.point)
    for target in tactics.targets[1:]:
        d = euclidean(resultant.point, target.point)
        if d < best_d:
            best, best_d = target, d
    return best


def rate_with_tactics(
    world: WorldState,
    action: Action,
    tactics: TacticSet,
    actor: PlayerId | None = None,
    pitch: Pitch = DEFAULT_PITCH,
) -> RatedAction:
    """Rate an action against its assigned tactic target.

    With a single-target set whose point is the opponent goal this reduces to
    rate_baseline exactly.
    """
    resultant = predict_result(world, action, actor, pitch)
    target = assign_tactic(action, resultant, tactics)
    return RatedAction(action, resultant, target, euclidean(resultant.point, target.point))


def select_action(rated: list[RatedAction]) -> RatedAction:
    """Minimum-rating element; ties keep the earliest candidate."""
    if not rated:
        raise ValueError("select_action needs at least one rated candidate")
    best = rated[0]
    for candidate in rated[1:]:
        if candidate.rating < best.rating:
            best = candidate
    return best


def _one_step_point(origin: Point2, destination: Point2, step_length: float) -> Point2:
    d = euclidean(origin, destination)
    if d <= step_length:
        return destination
    t = step_length / d
    return Point2(origin.x + t * (destination.x - origin.x), origin.y + t * (destination.y - origin.y))


def decide(
    world: WorldState,
    actor: PlayerId,
    tactics: TacticSet,
    mode: EvalMode,
    action_params: ActionParams = DEFAULT_ACTION_PARAMS,
    positioning_params: PositioningParams = DEFAULT_POSITIONING_PARAMS,
    pitch: Pitch = DEFAULT_PITCH,
    diagram: VoronoiDiagram | None = None,
    x_weight: float = 0.0,
) -> RatedAction:
    """Full decision pipeline for one player: generate, rate, argmin.

    The ball holder rates kick candidates under the requested evaluator mode.
    Off-ball players rate their positioning candidates, each against the
    desirable state it pursues, using the point reachable within one cycle as
    the resultant; the argmin is then the most closely attainable objective.
    """
    side, number = actor
    if world.holder == actor:
        candidates = generate_ball_candidates(world, action_params, pitch)
        if mode is EvalMode.BASELINE:
            rated = [rate_baseline(world, a, actor, pitch, x_weight) for a in candidates]
        else:
            rated = [rate_with_tactics(world, a, tactics, actor, pitch) for a in candidates]
        return select_action(rated)

    targets = positioning_targets(world, actor, positioning_params, diagram, pitch)
    me = world.player(side, number)
    rated = []
    for action, target in targets.entries:
        reach = _one_step_point(me.position, target.point, positioning_params.step_length)
        resultant = ResultantState(point=reach, actor=actor, action=action)
        rated.append(RatedAction(action, resultant, target, euclidean(reach, target.point)))
    return select_action(rated)


@dataclass(frozen=True, slots=True)
class TacticParams:
    """Knobs for the default per-cycle tactic generation."""

    #: The standing waypoints sit at (box_x, +-box_y_fraction * width): the
    #: corners of the penalty box, pulling play around the defensive block
    #: and into the box instead of straight at the packed middle.
    box_x: float = 44.0
    box_y_fraction: float = 11.0 / 68.0
    #: Ball past this fraction of the pitch length (attacking direction) adds
    #: the opponent goal itself as a desirable state. Gating it this late is
    #: shot discipline: the holder works the ball to the box instead of
    #: donating it with long shots straight at the keeper.
    goal_gate_fraction: float = 0.38
    #: A waypoint this close to the ball counts as achieved and drops out, so
    #: play is pulled onward instead of parking on the point.
    achieved_radius: float = 8.0


DEFAULT_TACTIC_PARAMS = TacticParams()


def default_tactics(
    world: WorldState,
    side: Side,
    params: TacticParams = DEFAULT_TACTIC_PARAMS,
    pitch: Pitch = DEFAULT_PITCH,
) -> TacticSet:
    """Two standing attack waypoints, mirrored by attacking side, plus the
    opponent goal once the ball crosses the gate into the attacking end.
    Waypoints the ball has already reached are dropped for the cycle.

    The mirror negates x only, so a side-swapped world yields side-swapped
    tactic sets.
    """
    sign = side.attack_sign
    ball = world.ball.position
    goal = opponent_goal_center(side, pitch)
    wy = params.box_y_fraction * pitch.width
    waypoints = [
        TacticTarget("box-top", Point2(sign * params.box_x, wy)),
        TacticTarget("box-bottom", Point2(sign * params.box_x, -wy)),
    ]
    targets = [t for t in waypoints if euclidean(ball, t.point) > params.achieved_radius]
    if ball.x * sign > params.goal_gate_fraction * pitch.length:
        targets.append(TacticTarget("goal", goal))
    if not targets:
        targets = [TacticTarget("goal", goal)]
    return TacticSet(targets=tuple(targets))
