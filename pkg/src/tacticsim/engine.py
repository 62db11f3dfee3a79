"""Cycle-stepped 11v11 match simulation.

Each cycle every player gets exactly one action: forced ball-chasing for the
best-placed interceptor per side, an evaluator decision for everyone else.
Physics then applies kicks, movement, ball travel with decay, possession,
goals, and restarts. The only stochastic element is seeded Gaussian
kick-direction noise, so a match is a pure function of its config.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .actions import (
    Action,
    ActionParams,
    Block,
    DEFAULT_ACTION_PARAMS,
    DirectPass,
    Dribble,
    Hold,
    LeadPass,
    Move,
    Shoot,
    predict_result,
    unit_from_degrees,
)
from .core import (
    BallState,
    DEFAULT_PITCH,
    Pitch,
    PlayMode,
    PlayerId,
    PlayerState,
    Point2,
    Side,
    WorldState,
    clamp_to_pitch,
    euclidean,
    normalize_degrees,
)
from .evaluation import (
    DEFAULT_TACTIC_PARAMS,
    EvalMode,
    TacticParams,
    decide,
    default_tactics,
)
from .field_control import (
    DEFAULT_POSITIONING_PARAMS,
    PositioningParams,
    world_diagram,
)
from .formation import DEFAULT_FORMATION, FormationSlot, home_position, validate_formation


@dataclass(frozen=True, slots=True)
class EngineParams:
    """Kinematic constants, applied symmetrically to both teams."""

    ball_decay: float = 0.94
    kick_speed: float = 2.7
    dribble_power: float = 1.3
    max_player_speed: float = 1.05
    kickable_margin: float = 1.085
    #: A kicked ball is uncontestable this close to where it was struck; it
    #: clears adjacent feet before opponents can play it.
    kick_protect_radius: float = 1.5
    intercept_horizon: int = 50
    #: Cycles between recomputes of the shared Voronoi diagram feeding
    #: open-space positioning; staleness trades accuracy for speed.
    diagram_refresh: int = 10


DEFAULT_ENGINE_PARAMS = EngineParams()


@dataclass(frozen=True, slots=True)
class TeamConfig:
    name: str
    evaluator_mode: EvalMode = EvalMode.TACTICS
    tactic_params: TacticParams = DEFAULT_TACTIC_PARAMS
    formation: tuple[FormationSlot, ...] = DEFAULT_FORMATION
    action_params: ActionParams = DEFAULT_ACTION_PARAMS
    positioning_params: PositioningParams = DEFAULT_POSITIONING_PARAMS
    #: Optional baseline variant: weight of an attacking-x bonus in ratings.
    x_weight: float = 0.0

    def __post_init__(self) -> None:
        validate_formation(self.formation)


@dataclass(frozen=True, slots=True)
class MatchConfig:
    team_left: TeamConfig
    team_right: TeamConfig
    cycles: int = 6000
    seed: int = 0
    noise_scale: float = 0.05
    kickoff_side: Side = Side.LEFT
    engine: EngineParams = DEFAULT_ENGINE_PARAMS
    pitch: Pitch = DEFAULT_PITCH

    def __post_init__(self) -> None:
        if self.cycles < 0:
            raise ValueError("cycles must be >= 0")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in unsigned 64 bits")
        if self.noise_scale < 0:
            raise ValueError("noise_scale must be >= 0")


@dataclass(frozen=True, slots=True)
class MatchMeta:
    pitch: Pitch
    team_left: str
    team_right: str
    seed: int


@dataclass(frozen=True, slots=True)
class MatchLog:
    meta: MatchMeta
    frames: tuple[WorldState, ...]

    def __post_init__(self) -> None:
        cycles = [f.cycle for f in self.frames]
        if any(b - a != 1 for a, b in zip(cycles, cycles[1:])):
            raise ValueError("log frames must increase by exactly one cycle")


@dataclass(frozen=True, slots=True)
class MatchResult:
    score_left: int
    score_right: int
    cycles_played: int
    log: MatchLog

    def __post_init__(self) -> None:
        if self.score_left < 0 or self.score_right < 0:
            raise ValueError("scores must be >= 0")
        if len(self.log.frames) != self.cycles_played + 1:
            raise ValueError("log must hold exactly cycles_played + 1 frames")


def kickoff_world(
    config: MatchConfig,
    kicking: Side,
    cycle: int = 0,
    score_left: int = 0,
    score_right: int = 0,
) -> WorldState:
    """Both formations at their homes, ball centered, kicking side's number 9
    on the ball."""
    players = []
    for side, team in ((Side.LEFT, config.team_left), (Side.RIGHT, config.team_right)):
        facing = 0.0 if side is Side.LEFT else -180.0
        for slot in team.formation:
            if side is kicking and slot.number == 9:
                pos = Point2(-side.attack_sign * 0.5, 0.0)
            else:
                pos = home_position(side, slot.number, 0.0, config.pitch, team.formation)
            players.append(
                PlayerState(side, slot.number, pos, Point2(0.0, 0.0), facing, slot.role)
            )
    mode = PlayMode.KICKOFF_LEFT if kicking is Side.LEFT else PlayMode.KICKOFF_RIGHT
    return WorldState(
        cycle=cycle,
        play_mode=mode,
        ball=BallState(Point2(0.0, 0.0), Point2(0.0, 0.0)),
        players=tuple(players),
        score_left=score_left,
        score_right=score_right,
        holder=(kicking, 9),
    )


def _ball_path(world: WorldState, params: EngineParams) -> list[tuple[float, float]]:
    """Ball positions for the next ``intercept_horizon`` cycles assuming no
    further touches."""
    x, y = world.ball.position.x, world.ball.position.y
    vx, vy = world.ball.velocity.x, world.ball.velocity.y
    decay = params.ball_decay
    path = []
    for _ in range(params.intercept_horizon):
        x += vx
        y += vy
        vx *= decay
        vy *= decay
        path.append((x, y))
    return path


def intercept_plan(
    world: WorldState,
    player: PlayerId,
    params: EngineParams = DEFAULT_ENGINE_PARAMS,
    path: list[tuple[float, float]] | None = None,
) -> tuple[float, Point2]:
    """Predicted (time, point) at which this player can first meet the ball.

    Feasible at cycle t when the point is within t * max_player_speed +
    kickable_margin of the player. If the horizon never suffices, the time
    extends past the horizon at top speed toward the ball's final point.
    """
    if path is None:
        path = _ball_path(world, params)
    me = world.player(*player)
    px, py = me.position.x, me.position.y
    speed = params.max_player_speed
    margin = params.kickable_margin
    for t, (bx, by) in enumerate(path, start=1):
        if math.hypot(bx - px, by - py) <= t * speed + margin:
            return float(t), Point2(bx, by)
    bx, by = path[-1]
    overshoot = (math.hypot(bx - px, by - py) - margin) / speed
    return float(len(path)) + overshoot, Point2(bx, by)


def _intercept_table(
    world: WorldState, params: EngineParams
) -> dict[PlayerId, Point2]:
    """Per side without possession, the fastest player to the ball and the
    point to chase. Ties go to the lower number."""
    path = _ball_path(world, params)
    holder_side = world.holder[0] if world.holder is not None else None
    table: dict[PlayerId, Point2] = {}
    for side in (Side.LEFT, Side.RIGHT):
        if side is holder_side:
            continue
        best: tuple[float, int] | None = None
        best_point = None
        for p in world.players_of(side):
            t, point = intercept_plan(world, (side, p.number), params, path)
            key = (t, p.number)
            if best is None or key < best:
                best, best_point = key, point
        if best is not None:
            table[(side, best[1])] = best_point
    return table


def intercept_assignment(
    world: WorldState, params: EngineParams = DEFAULT_ENGINE_PARAMS
) -> set[PlayerId]:
    """The players forced into ball-chasing this cycle, bypassing evaluation:
    per side not in possession, the one with the best interception time."""
    return set(_intercept_table(world, params))


def _validate_decisions(
    world: WorldState, decisions: dict[PlayerId, Action]
) -> None:
    for p in world.players:
        pid = (p.side, p.number)
        action = decisions.get(pid)
        if action is None:
            raise ValueError(f"missing decision for {p.side.value}{p.number}")
        is_holder = world.holder == pid
        if isinstance(action, (DirectPass, LeadPass, Dribble, Shoot)):
            if not is_holder:
                raise ValueError(
                    f"{p.side.value}{p.number} is not the holder and cannot kick"
                )
        elif isinstance(action, (Move, Block)):
            if is_holder:
                raise ValueError("the holder must play the ball, not reposition")
    if len(decisions) != 22:
        extra = set(decisions) - {(p.side, p.number) for p in world.players}
        raise ValueError(f"decisions for unknown players: {sorted(extra)}")


def _goal_reset(world: WorldState, config: MatchConfig) -> WorldState:
    """The frame after a goal frame: kickoff lineup for the conceding side."""
    conceder = Side.RIGHT if world.play_mode is PlayMode.GOAL_LEFT else Side.LEFT
    reset = kickoff_world(
        config, conceder, world.cycle + 1, world.score_left, world.score_right
    )
    return reset


def step(
    world: WorldState,
    decisions: dict[PlayerId, Action],
    config: MatchConfig,
    rng: random.Random | None = None,
    last_touch: Side | None = None,
) -> WorldState:
    """Advance one cycle.

    From a goal frame this emits the kickoff lineup and ignores decisions.
    Otherwise: the holder's kick sets ball velocity, players move, the ball
    travels and decays, goals and out-of-bounds resolve, and possession goes
    to the nearest player within the kickable margin of the ball's path.
    ``last_touch`` awards throw-ins against the side that last held the ball.
    """
    if world.play_mode in (PlayMode.GOAL_LEFT, PlayMode.GOAL_RIGHT):
        return _goal_reset(world, config)

    params = config.engine
    pitch = config.pitch
    _validate_decisions(world, decisions)

    ball = world.ball
    bx0, by0 = ball.position.x, ball.position.y
    bvx, bvy = ball.velocity.x, ball.velocity.y
    holder = world.holder
    kicked = False

    # Holder's touch first: it overrides the ball velocity for this cycle.
    if holder is not None:
        action = decisions[holder]
        if isinstance(action, (DirectPass, LeadPass, Shoot)):
            target = predict_result(world, action, holder, pitch).point
            dx, dy = target.x - bx0, target.y - by0
            norm = math.hypot(dx, dy)
            if norm > 1e-9:
                speed = params.kick_speed
                if rng is not None and config.noise_scale > 0.0:
                    theta = math.atan2(dy, dx) + rng.gauss(0.0, config.noise_scale)
                    bvx, bvy = speed * math.cos(theta), speed * math.sin(theta)
                else:
                    bvx, bvy = speed * dx / norm, speed * dy / norm
                kicked = True
            else:
                bvx = bvy = 0.0
        elif isinstance(action, Dribble):
            ux, uy = unit_from_degrees(action.direction)
            bvx, bvy = params.dribble_power * ux, params.dribble_power * uy
            kicked = True
        elif isinstance(action, Hold):
            bvx = bvy = 0.0

    # Player movement.
    speed_cap = params.max_player_speed
    moved: list[PlayerState] = []
    for p in world.players:
        pid = (p.side, p.number)
        action = decisions[pid]
        target: Point2 | None = None
        if isinstance(action, Move):
            target = action.target
        elif isinstance(action, Block):
            opp = world.player(*action.opponent)
            target = Point2(
                (opp.position.x + bx0) / 2.0, (opp.position.y + by0) / 2.0
            )
        elif isinstance(action, Dribble) and pid == holder:
            ux, uy = unit_from_degrees(action.direction)
            target = Point2(
                p.position.x + action.distance * ux, p.position.y + action.distance * uy
            )
        if target is None:
            if p.velocity.x != 0.0 or p.velocity.y != 0.0:
                p = PlayerState(p.side, p.number, p.position, Point2(0.0, 0.0), p.body_dir, p.role)
            moved.append(p)
            continue
        dx, dy = target.x - p.position.x, target.y - p.position.y
        d = math.hypot(dx, dy)
        if d <= 1e-9:
            new_pos = p.position
            vel = Point2(0.0, 0.0)
            body = p.body_dir
        else:
            if d <= speed_cap:
                new_pos = Point2(target.x, target.y)
            else:
                f = speed_cap / d
                new_pos = Point2(p.position.x + f * dx, p.position.y + f * dy)
            new_pos = clamp_to_pitch(new_pos, pitch)
            vel = Point2(new_pos.x - p.position.x, new_pos.y - p.position.y)
            body = normalize_degrees(math.degrees(math.atan2(dy, dx)))
        moved.append(PlayerState(p.side, p.number, new_pos, vel, body, p.role))

    # Ball travel, then decay.
    bx1, by1 = bx0 + bvx, by0 + bvy
    next_bvx, next_bvy = bvx * params.ball_decay, bvy * params.ball_decay

    next_cycle = world.cycle + 1
    score_left, score_right = world.score_left, world.score_right

    # Goal or out of bounds: find the first boundary crossing along the path.
    hl, hw = pitch.half_length, pitch.half_width
    half_goal = pitch.goal_width / 2.0
    crossing: tuple[float, str] | None = None
    if bx1 > hl or bx1 < -hl or by1 > hw or by1 < -hw:
        candidates = []
        if bx1 > hl and bx1 != bx0:
            candidates.append(((hl - bx0) / (bx1 - bx0), "right-line"))
        if bx1 < -hl and bx1 != bx0:
            candidates.append(((-hl - bx0) / (bx1 - bx0), "left-line"))
        if by1 > hw and by1 != by0:
            candidates.append(((hw - by0) / (by1 - by0), "touch"))
        if by1 < -hw and by1 != by0:
            candidates.append(((-hw - by0) / (by1 - by0), "touch"))
        candidates = [
            (min(max(t, 0.0), 1.0), kind)
            for t, kind in candidates
            if -1e-9 <= t <= 1.0 + 1e-9
        ]
        if candidates:
            crossing = min(candidates)

    if crossing is not None:
        t_cross, kind = crossing
        cx = bx0 + t_cross * (bx1 - bx0)
        cy = by0 + t_cross * (by1 - by0)
        if kind == "right-line" and abs(cy) <= half_goal:
            return WorldState(
                cycle=next_cycle,
                play_mode=PlayMode.GOAL_LEFT,
                ball=BallState(Point2(hl, cy), Point2(0.0, 0.0)),
                players=tuple(moved),
                score_left=score_left + 1,
                score_right=score_right,
                holder=None,
            )
        if kind == "left-line" and abs(cy) <= half_goal:
            return WorldState(
                cycle=next_cycle,
                play_mode=PlayMode.GOAL_RIGHT,
                ball=BallState(Point2(-hl, cy), Point2(0.0, 0.0)),
                players=tuple(moved),
                score_left=score_left,
                score_right=score_right + 1,
                holder=None,
            )
        # Restart: ball pulled a meter inside, awarded against the side that
        # last touched (goal-line exits go to the defending side), and the
        # awarded side's nearest player steps in as the taker.
        spot = Point2(
            min(max(cx, -hl + 1.0), hl - 1.0), min(max(cy, -hw + 1.0), hw - 1.0)
        )
        if kind == "right-line":
            award = Side.RIGHT
        elif kind == "left-line":
            award = Side.LEFT
        elif last_touch is not None:
            award = last_touch.opponent
        else:
            award = min(
                (p for p in moved),
                key=lambda p: (euclidean(p.position, spot), p.side.value, p.number),
            ).side
        taker = min(
            (p for p in moved if p.side is award),
            key=lambda p: (euclidean(p.position, spot), p.number),
        )
        taker_pos = clamp_to_pitch(
            Point2(spot.x - award.attack_sign * 0.5, spot.y), pitch
        )
        facing = 0.0 if award is Side.LEFT else -180.0
        replaced = [
            PlayerState(p.side, p.number, taker_pos, Point2(0.0, 0.0), facing, p.role)
            if (p.side, p.number) == (taker.side, taker.number)
            else p
            for p in moved
        ]
        return WorldState(
            cycle=next_cycle,
            play_mode=PlayMode.OUT_OF_PLAY,
            ball=BallState(spot, Point2(0.0, 0.0)),
            players=tuple(replaced),
            score_left=score_left,
            score_right=score_right,
            holder=(taker.side, taker.number),
        )

    # Possession: nearest player to the ball's path within the kickable
    # margin. The kicker is excluded on the cycle it strikes the ball.
    margin = params.kickable_margin
    seg_dx, seg_dy = bx1 - bx0, by1 - by0
    seg_len_sq = seg_dx * seg_dx + seg_dy * seg_dy
    t_lo = 0.0
    if kicked and seg_len_sq > 0.0:
        t_lo = min(params.kick_protect_radius / math.sqrt(seg_len_sq), 1.0)
    best_d = margin
    best_idx = -1
    best_t = 0.0
    for idx, p in enumerate(moved):
        if kicked and (p.side, p.number) == holder:
            continue
        px, py = p.position.x, p.position.y
        if seg_len_sq > 0.0:
            t = ((px - bx0) * seg_dx + (py - by0) * seg_dy) / seg_len_sq
            t = t_lo if t < t_lo else (1.0 if t > 1.0 else t)
        else:
            t = 0.0
        qx, qy = bx0 + t * seg_dx, by0 + t * seg_dy
        d = math.hypot(px - qx, py - qy)
        if d < best_d or (d == best_d and best_idx < 0):
            best_d, best_idx, best_t = d, idx, t
    new_holder: PlayerId | None = None
    if best_idx >= 0:
        winner = moved[best_idx]
        new_holder = (winner.side, winner.number)
        # Trap: the ball sticks where its path passed the winner.
        bx1, by1 = bx0 + best_t * seg_dx, by0 + best_t * seg_dy
        next_bvx = next_bvy = 0.0

    return WorldState(
        cycle=next_cycle,
        play_mode=PlayMode.PLAY_ON,
        ball=BallState(Point2(bx1, by1), Point2(next_bvx, next_bvy)),
        players=tuple(moved),
        score_left=score_left,
        score_right=score_right,
        holder=new_holder,
    )


def _team_of(config: MatchConfig, side: Side) -> TeamConfig:
    return config.team_left if side is Side.LEFT else config.team_right


def _decide_all(
    world: WorldState, config: MatchConfig, diagram
) -> dict[PlayerId, Action]:
    """One action per player: forced interceptors first, evaluator for the
    rest."""
    params = config.engine
    decisions: dict[PlayerId, Action] = {
        pid: Move(point) for pid, point in _intercept_table(world, params).items()
    }
    tactics = {
        side: default_tactics(world, side, _team_of(config, side).tactic_params, config.pitch)
        for side in (Side.LEFT, Side.RIGHT)
    }
    for p in world.players:
        pid = (p.side, p.number)
        if pid in decisions:
            continue
        team = _team_of(config, p.side)
        decisions[pid] = decide(
            world,
            pid,
            tactics[p.side],
            team.evaluator_mode,
            team.action_params,
            team.positioning_params,
            config.pitch,
            diagram,
            team.x_weight,
        ).action
    return decisions


def _simulate(
    config: MatchConfig, record: bool
) -> tuple[int, int, list[WorldState]]:
    rng = random.Random(config.seed)
    world = kickoff_world(config, config.kickoff_side)
    frames = [world]
    last_touch: Side | None = config.kickoff_side
    diagram = None
    diagram_age = config.engine.diagram_refresh
    # Kickoff alternates at halftime so neither side keeps the structural
    # advantage of first possession.
    half = config.cycles // 2 if config.cycles >= 2 else 0
    for _ in range(config.cycles):
        if half and world.cycle + 1 == half:
            second_kicker = config.kickoff_side.opponent
            world = kickoff_world(
                config, second_kicker, half, world.score_left, world.score_right
            )
            last_touch = second_kicker
            diagram_age = config.engine.diagram_refresh
        elif world.play_mode in (PlayMode.GOAL_LEFT, PlayMode.GOAL_RIGHT):
            world = step(world, {}, config, rng, last_touch)
            diagram_age = config.engine.diagram_refresh
        else:
            if diagram_age >= config.engine.diagram_refresh:
                diagram = world_diagram(world, config.pitch)
                diagram_age = 0
            decisions = _decide_all(world, config, diagram)
            world = step(world, decisions, config, rng, last_touch)
            diagram_age += 1
        if world.holder is not None:
            last_touch = world.holder[0]
        if record:
            frames.append(world)
        else:
            frames[0] = world
    final = frames[-1]
    return final.score_left, final.score_right, frames


def play_match(config: MatchConfig) -> MatchResult:
    """Run a full match and keep every frame. A pure function of the config:
    identical configs give identical results, byte for byte once serialized."""
    score_left, score_right, frames = _simulate(config, record=True)
    log = MatchLog(
        meta=MatchMeta(
            pitch=config.pitch,
            team_left=config.team_left.name,
            team_right=config.team_right.name,
            seed=config.seed,
        ),
        frames=tuple(frames),
    )
    return MatchResult(
        score_left=score_left,
        score_right=score_right,
        cycles_played=config.cycles,
        log=log,
    )


def play_match_scores(config: MatchConfig) -> tuple[int, int]:
    """Same dynamics as play_match without retaining frames; the memory-lean
    runner behind long series."""
    score_left, score_right, _ = _simulate(config, record=False)
    return score_left, score_right
