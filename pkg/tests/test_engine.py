import math
import random

import pytest

from tacticsim.actions import (
    DirectPass,
    Dribble,
    Hold,
    Move,
    Shoot,
)
from tacticsim.core import (
    BallState,
    PlayMode,
    PlayerState,
    Point2,
    Side,
    WorldState,
    euclidean,
    mirror_world,
    make_world,
)
from tacticsim.engine import (
    DEFAULT_ENGINE_PARAMS,
    EngineParams,
    MatchConfig,
    MatchLog,
    MatchMeta,
    TeamConfig,
    intercept_assignment,
    intercept_plan,
    kickoff_world,
    play_match,
    play_match_scores,
    step,
)
from tacticsim.evaluation import EvalMode
from helpers import random_world, role_of


def _config(noise=0.0, cycles=100, seed=0, **kwargs):
    return MatchConfig(
        team_left=TeamConfig(name="A", evaluator_mode=EvalMode.TACTICS),
        team_right=TeamConfig(name="B", evaluator_mode=EvalMode.BASELINE),
        cycles=cycles,
        seed=seed,
        noise_scale=noise,
        **kwargs,
    )


def _static_world(positions, ball_pos, ball_vel=(0.0, 0.0), holder=None, mode=PlayMode.PLAY_ON):
    players = []
    for side in (Side.LEFT, Side.RIGHT):
        for number in range(1, 12):
            default = (side.attack_sign * -40.0, -28.0 + 2.0 * number + (0.5 if side is Side.RIGHT else 0.0))
            x, y = positions.get((side, number), default)
            players.append(
                PlayerState(side, number, Point2(x, y), Point2(0.0, 0.0), 0.0, role_of(number))
            )
    return make_world(
        cycle=0,
        play_mode=mode,
        ball=BallState(Point2(*ball_pos), Point2(*ball_vel)),
        players=players,
        holder=holder,
    )


def _hold_all(world):
    return {(p.side, p.number): Hold() for p in world.players}


def test_match_config_validation():
    with pytest.raises(ValueError):
        _config(cycles=-1)
    with pytest.raises(ValueError):
        _config(seed=2**64)
    with pytest.raises(ValueError):
        _config(noise=-0.1)


def test_kickoff_world_layout():
    config = _config()
    world = kickoff_world(config, Side.LEFT)
    assert world.play_mode is PlayMode.KICKOFF_LEFT
    assert world.ball.position == Point2(0.0, 0.0)
    assert world.ball.velocity == Point2(0.0, 0.0)
    assert world.holder == (Side.LEFT, 9)
    kicker = world.player(Side.LEFT, 9)
    assert kicker.position == Point2(-0.5, 0.0)
    for p in world.players:
        assert p.velocity == Point2(0.0, 0.0)
        assert p.body_dir == (0.0 if p.side is Side.LEFT else -180.0)
        # everyone except the kicker stands in their own half
        if (p.side, p.number) != (Side.LEFT, 9):
            assert p.position.x * p.side.attack_sign <= 0.0

    mirrored = kickoff_world(config, Side.RIGHT)
    assert mirrored.holder == (Side.RIGHT, 9)
    assert mirrored.player(Side.RIGHT, 9).position == Point2(0.5, 0.0)


def test_intercept_plan_matches_brute_force():
    rng = random.Random(30)
    params = DEFAULT_ENGINE_PARAMS
    for _ in range(200):
        world = random_world(rng)
        # give the ball a random rolling velocity
        world = WorldState(
            cycle=world.cycle,
            play_mode=world.play_mode,
            ball=BallState(
                world.ball.position,
                Point2(rng.uniform(-2.7, 2.7), rng.uniform(-2.7, 2.7)),
            ),
            players=world.players,
            score_left=world.score_left,
            score_right=world.score_right,
        )
        side = Side.LEFT if rng.random() < 0.5 else Side.RIGHT
        pid = (side, rng.randrange(1, 12))
        t_got, point_got = intercept_plan(world, pid, params)

        me = world.player(*pid)
        bx, by = world.ball.position.x, world.ball.position.y
        vx, vy = world.ball.velocity.x, world.ball.velocity.y
        expect = None
        for t in range(1, params.intercept_horizon + 1):
            bx += vx
            by += vy
            vx *= params.ball_decay
            vy *= params.ball_decay
            if math.hypot(bx - me.position.x, by - me.position.y) <= t * params.max_player_speed + params.kickable_margin:
                expect = (float(t), Point2(bx, by))
                break
        if expect is None:
            overshoot = (math.hypot(bx - me.position.x, by - me.position.y) - params.kickable_margin) / params.max_player_speed
            expect = (params.intercept_horizon + overshoot, Point2(bx, by))
        assert t_got == expect[0]
        assert point_got == expect[1]


def test_intercept_assignment_one_chaser_per_side_without_ball():
    world = _static_world({}, (0.0, 0.0), ball_vel=(1.0, 0.5))
    chasers = intercept_assignment(world)
    assert len(chasers) == 2
    assert {side for side, _ in chasers} == {Side.LEFT, Side.RIGHT}

    held = _static_world({(Side.LEFT, 9): (0.0, 0.0)}, (0.0, 0.0), holder=(Side.LEFT, 9))
    chasers = intercept_assignment(held)
    assert {side for side, _ in chasers} == {Side.RIGHT}


def test_step_hold_keeps_ball_still():
    world = _static_world({(Side.LEFT, 9): (3.0, 2.0)}, (3.0, 2.0), holder=(Side.LEFT, 9))
    after = step(world, _hold_all(world), _config())
    assert after.cycle == 1
    assert after.play_mode is PlayMode.PLAY_ON
    assert after.ball.position == Point2(3.0, 2.0)
    assert after.ball.velocity == Point2(0.0, 0.0)
    assert after.holder == (Side.LEFT, 9)


def test_step_pass_sets_exact_velocity_without_noise():
    world = _static_world(
        {(Side.LEFT, 9): (0.0, 0.0), (Side.LEFT, 10): (10.0, 0.0)},
        (0.0, 0.0),
        holder=(Side.LEFT, 9),
    )
    decisions = _hold_all(world)
    decisions[(Side.LEFT, 9)] = DirectPass((Side.LEFT, 10))
    after = step(world, decisions, _config())
    # ball moved one cycle at kick speed toward the receiver, then decays
    assert after.ball.position == Point2(2.7, 0.0)
    assert after.ball.velocity == Point2(2.7 * 0.94, 0.0)
    # ball has left the kicker's control and nobody else reaches it yet
    assert after.holder is None


def test_step_dribble_moves_player_and_ball_together():
    world = _static_world({(Side.LEFT, 9): (0.0, 0.0)}, (0.0, 0.0), holder=(Side.LEFT, 9))
    decisions = _hold_all(world)
    decisions[(Side.LEFT, 9)] = Dribble(0.0, 5.0)
    after = step(world, decisions, _config())
    assert after.ball.position == Point2(1.3, 0.0)
    dribbler = after.player(Side.LEFT, 9)
    assert dribbler.position == Point2(1.05, 0.0)
    assert dribbler.body_dir == 0.0
    # the nudged ball stays within the dribbler's control
    assert after.holder == (Side.LEFT, 9)


def test_step_move_caps_speed_and_faces_travel():
    world = _static_world({(Side.RIGHT, 5): (0.0, 0.0)}, (30.0, 20.0))
    decisions = _hold_all(world)
    decisions[(Side.RIGHT, 5)] = Move(Point2(10.0, 0.0))
    after = step(world, decisions, _config())
    mover = after.player(Side.RIGHT, 5)
    assert mover.position == Point2(1.05, 0.0)
    assert mover.velocity == Point2(1.05, 0.0)
    assert mover.body_dir == 0.0

    decisions = {(p.side, p.number): Hold() for p in after.players}
    decisions[(Side.RIGHT, 5)] = Move(Point2(1.05, 0.8))
    third = step(after, decisions, _config())
    assert third.player(Side.RIGHT, 5).position == Point2(1.05, 0.8)
    assert third.player(Side.RIGHT, 5).body_dir == 90.0


def test_step_validates_decision_tables():
    world = _static_world({(Side.LEFT, 9): (0.0, 0.0)}, (0.0, 0.0), holder=(Side.LEFT, 9))
    with pytest.raises(ValueError):
        step(world, {}, _config())  # nobody decided
    bad = _hold_all(world)
    bad[(Side.LEFT, 4)] = Shoot()  # kick by a player without the ball
    with pytest.raises(ValueError):
        step(world, bad, _config())
    bad = _hold_all(world)
    bad[(Side.LEFT, 9)] = Move(Point2(1.0, 1.0))  # holder must play the ball
    with pytest.raises(ValueError):
        step(world, bad, _config())
    extra = _hold_all(world)
    extra[("X", 1)] = Hold()
    with pytest.raises(ValueError):
        step(world, extra, _config())


def test_pass_interception_by_player_on_the_lane():
    # opponent well outside the kick protection radius, right on the lane
    world = _static_world(
        {
            (Side.LEFT, 9): (0.0, 0.0),
            (Side.LEFT, 10): (20.0, 0.0),
            (Side.RIGHT, 6): (2.8, 0.0),
        },
        (0.0, 0.0),
        holder=(Side.LEFT, 9),
    )
    decisions = _hold_all(world)
    decisions[(Side.LEFT, 9)] = DirectPass((Side.LEFT, 10))
    after = step(world, decisions, _config())
    assert after.holder == (Side.RIGHT, 6)
    # the trap kills the ball dead on the path point nearest the taker
    assert after.ball.velocity == Point2(0.0, 0.0)
    assert euclidean(after.ball.position, after.player(Side.RIGHT, 6).position) <= 1.085


def test_kick_protection_shields_the_strike_point():
    # same situation but the opponent stands inside the protection radius
    world = _static_world(
        {
            (Side.LEFT, 9): (0.0, 0.0),
            (Side.LEFT, 10): (20.0, 0.0),
            (Side.RIGHT, 6): (1.2, 0.0),
        },
        (0.0, 0.0),
        holder=(Side.LEFT, 9),
    )
    decisions = _hold_all(world)
    decisions[(Side.LEFT, 9)] = DirectPass((Side.LEFT, 10))
    after = step(world, decisions, _config())
    assert after.holder is None
    assert after.ball.position == Point2(2.7, 0.0)


def test_goal_scoring_sequence_and_kickoff_reset():
    world = _static_world({}, (51.0, 3.0), ball_vel=(2.0, 0.0))
    after = step(world, _hold_all(world), _config(), last_touch=Side.LEFT)
    assert after.play_mode is PlayMode.GOAL_LEFT
    assert after.score_left == 1 and after.score_right == 0
    assert after.ball.position == Point2(52.5, 3.0)

    reset = step(after, {}, _config())
    assert reset.play_mode is PlayMode.KICKOFF_RIGHT
    assert reset.ball.position == Point2(0.0, 0.0)
    assert reset.holder == (Side.RIGHT, 9)
    assert reset.score_left == 1 and reset.score_right == 0
    assert reset.cycle == after.cycle + 1


def test_wide_goal_line_exit_awards_the_defenders():
    world = _static_world({(Side.RIGHT, 2): (45.0, 20.0)}, (51.8, 20.0), ball_vel=(2.0, 0.0))
    after = step(world, _hold_all(world), _config(), last_touch=Side.LEFT)
    assert after.play_mode is PlayMode.OUT_OF_PLAY
    assert after.score_left == 0 and after.score_right == 0
    assert after.holder is not None and after.holder[0] is Side.RIGHT
    assert after.ball.position.x <= 51.5
    taker = after.player(*after.holder)
    assert euclidean(taker.position, after.ball.position) <= 1.085


def test_touchline_exit_awards_opponents_of_last_touch():
    world = _static_world({}, (10.0, 33.5), ball_vel=(0.0, 2.0))
    after = step(world, _hold_all(world), _config(), last_touch=Side.LEFT)
    assert after.play_mode is PlayMode.OUT_OF_PLAY
    assert after.holder is not None and after.holder[0] is Side.RIGHT
    assert after.ball.position == Point2(10.0, 33.0)


def test_ball_decay_follows_geometric_path():
    world = _static_world({}, (0.0, 0.0), ball_vel=(1.0, 0.0))
    config = _config()
    positions = [world.ball.position.x]
    for _ in range(5):
        world = step(world, _hold_all(world), config)
        positions.append(world.ball.position.x)
    deltas = [b - a for a, b in zip(positions, positions[1:])]
    for i, d in enumerate(deltas):
        assert abs(d - 0.94**i) < 1e-12


def test_play_match_deterministic_and_well_formed():
    config = _config(noise=0.05, cycles=300, seed=11)
    r1 = play_match(config)
    r2 = play_match(config)
    assert r1 == r2
    assert r1.cycles_played == 300
    assert len(r1.log.frames) == 301
    assert [f.cycle for f in r1.log.frames] == list(range(301))
    assert (r1.score_left, r1.score_right) == play_match_scores(config)
    meta = r1.log.meta
    assert (meta.team_left, meta.team_right, meta.seed) == ("A", "B", 11)


def test_different_seeds_eventually_diverge():
    scores = {
        play_match_scores(_config(noise=0.05, cycles=500, seed=s)) for s in range(6)
    }
    frames = {
        play_match(_config(noise=0.05, cycles=200, seed=s)).log.frames[-1].ball.position
        for s in range(6)
    }
    assert len(scores) > 1 or len(frames) > 1


def test_halftime_swaps_the_kickoff():
    config = _config(cycles=10)
    result = play_match(config)
    assert result.log.frames[0].play_mode is PlayMode.KICKOFF_LEFT
    half = result.log.frames[5]
    assert half.play_mode is PlayMode.KICKOFF_RIGHT
    assert half.ball.position == Point2(0.0, 0.0)
    assert half.holder == (Side.RIGHT, 9)


def test_symmetric_teams_no_noise_always_draw():
    for seed in (0, 7, 123):
        team = TeamConfig(name="Twin", evaluator_mode=EvalMode.TACTICS)
        config = MatchConfig(
            team_left=team, team_right=team, cycles=600, seed=seed, noise_scale=0.0
        )
        sl, sr = play_match_scores(config)
        assert sl == sr


def test_mirrored_match_yields_mirrored_frames_without_noise():
    config = _config(cycles=400, seed=5)
    swapped = MatchConfig(
        team_left=config.team_right,
        team_right=config.team_left,
        cycles=400,
        seed=5,
        noise_scale=0.0,
        kickoff_side=Side.RIGHT,
    )
    a = play_match(config)
    b = play_match(swapped)
    assert (b.score_left, b.score_right) == (a.score_right, a.score_left)
    for fa, fb in zip(a.log.frames, b.log.frames):
        assert mirror_world(fa) == fb


def test_match_log_rejects_cycle_gaps():
    config = _config(cycles=3)
    frames = play_match(config).log.frames
    with pytest.raises(ValueError):
        MatchLog(
            meta=MatchMeta(pitch=config.pitch, team_left="A", team_right="B", seed=0),
            frames=(frames[0], frames[2]),
        )
