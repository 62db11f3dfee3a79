import math
import random

import pytest

from tacticsim.core import (
    DEFAULT_PITCH,
    BallState,
    Pitch,
    PlayMode,
    PlayerState,
    Point2,
    Role,
    Side,
    WorldState,
    clamp_to_pitch,
    dist_point_segment,
    euclidean,
    make_world,
    mirror_point,
    mirror_world,
    normalize_degrees,
    opponent_goal_center,
)


def _player(side, number, x=0.0, y=0.0, vx=0.0, vy=0.0, body=0.0, role=Role.MIDFIELDER):
    return PlayerState(side, number, Point2(x, y), Point2(vx, vy), body, role)


def _roster():
    players = []
    for side in (Side.LEFT, Side.RIGHT):
        for num in range(1, 12):
            role = Role.GOALKEEPER if num == 1 else Role.MIDFIELDER
            players.append(_player(side, num, x=side.attack_sign * -num, y=float(num), role=role))
    return players


def test_side_opponent_and_attack_sign():
    assert Side.LEFT.opponent is Side.RIGHT
    assert Side.RIGHT.opponent is Side.LEFT
    assert Side.LEFT.attack_sign == 1.0
    assert Side.RIGHT.attack_sign == -1.0


def test_pitch_rejects_bad_dimensions():
    with pytest.raises(ValueError):
        Pitch(length=0.0, width=68.0, goal_width=14.02)
    with pytest.raises(ValueError):
        Pitch(length=105.0, width=68.0, goal_width=0.0)
    with pytest.raises(ValueError):
        Pitch(length=105.0, width=68.0, goal_width=68.0)


def test_player_state_validates_number_and_direction():
    with pytest.raises(ValueError):
        _player(Side.LEFT, 0)
    with pytest.raises(ValueError):
        _player(Side.LEFT, 12)
    with pytest.raises(ValueError):
        _player(Side.LEFT, 3, body=180.0)
    with pytest.raises(ValueError):
        _player(Side.LEFT, 3, body=-180.5)
    assert _player(Side.LEFT, 3, body=-180.0).body_dir == -180.0


def _world(players, **kwargs):
    defaults = dict(
        cycle=0,
        play_mode=PlayMode.PLAY_ON,
        ball=BallState(Point2(0.0, 0.0), Point2(0.0, 0.0)),
        players=tuple(players),
        score_left=0,
        score_right=0,
    )
    defaults.update(kwargs)
    return WorldState(**defaults)


def test_world_state_requires_exactly_22_in_canonical_order():
    players = _roster()
    world = _world(players)
    assert world.player(Side.RIGHT, 7).number == 7

    with pytest.raises(ValueError):
        _world(players[:21])
    with pytest.raises(ValueError):
        _world(players[1:] + players[:1])


def test_make_world_sorts_and_rejects_duplicates():
    players = _roster()
    rng = random.Random(5)
    shuffled = players[:]
    rng.shuffle(shuffled)
    ball = BallState(Point2(1.0, 2.0), Point2(0.0, 0.0))
    world = make_world(0, PlayMode.PLAY_ON, ball, shuffled)
    assert [(p.side, p.number) for p in world.players] == [(p.side, p.number) for p in players]

    with pytest.raises(ValueError):
        make_world(0, PlayMode.PLAY_ON, ball, shuffled[:-1] + [shuffled[-2]])
    with pytest.raises(ValueError):
        make_world(0, PlayMode.PLAY_ON, ball, shuffled[:-1])


def test_euclidean_metric_axioms_on_sampled_triples():
    rng = random.Random(42)
    for _ in range(10_000):
        p, q, r = (
            Point2(rng.uniform(-60, 60), rng.uniform(-40, 40)) for _ in range(3)
        )
        dpq = euclidean(p, q)
        assert dpq >= 0.0
        assert dpq == euclidean(q, p)
        assert euclidean(p, p) == 0.0
        if p != q:
            assert dpq > 0.0
        assert euclidean(p, r) <= dpq + euclidean(q, r) + 1e-12


def test_clamp_to_pitch_is_idempotent_and_bounding():
    rng = random.Random(7)
    for _ in range(2_000):
        p = Point2(rng.uniform(-200, 200), rng.uniform(-200, 200))
        c = clamp_to_pitch(p)
        assert abs(c.x) <= DEFAULT_PITCH.half_length
        assert abs(c.y) <= DEFAULT_PITCH.half_width
        assert clamp_to_pitch(c) == c


def test_opponent_goal_center_by_frame_convention():
    assert opponent_goal_center(Side.LEFT, Pitch(100.0, 60.0, 14.0)) == Point2(50.0, 0.0)
    assert opponent_goal_center(Side.RIGHT) == Point2(-52.5, 0.0)


def test_normalize_degrees_folds_into_half_open_range():
    assert normalize_degrees(180.0) == -180.0
    assert normalize_degrees(-180.0) == -180.0
    assert normalize_degrees(540.0) == -180.0
    assert normalize_degrees(0.0) == 0.0
    rng = random.Random(3)
    for _ in range(2_000):
        d = normalize_degrees(rng.uniform(-1e4, 1e4))
        assert -180.0 <= d < 180.0


def test_dist_point_segment_matches_dense_sampling():
    rng = random.Random(11)
    for _ in range(300):
        a = Point2(rng.uniform(-50, 50), rng.uniform(-30, 30))
        b = Point2(rng.uniform(-50, 50), rng.uniform(-30, 30))
        p = Point2(rng.uniform(-50, 50), rng.uniform(-30, 30))
        exact = dist_point_segment(p, a, b)
        sampled = min(
            euclidean(p, Point2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
            for t in (i / 400 for i in range(401))
        )
        assert exact <= sampled + 1e-12
        # adjacent samples are seg_len/400 apart, which bounds the gap
        assert sampled - exact <= euclidean(a, b) / 400 + 1e-12


def test_mirror_point_is_exact_negation():
    p = Point2(12.34375, -7.5)
    assert mirror_point(p) == Point2(-12.34375, -7.5)
    assert mirror_point(mirror_point(p)) == p


def test_mirror_world_swaps_everything_and_is_an_involution():
    players = _roster()
    world = WorldState(
        cycle=9,
        play_mode=PlayMode.KICKOFF_LEFT,
        ball=BallState(Point2(3.0, -2.0), Point2(0.5, 0.25)),
        players=tuple(players),
        score_left=2,
        score_right=1,
        holder=(Side.LEFT, 9),
    )
    m = mirror_world(world)
    assert m.play_mode is PlayMode.KICKOFF_RIGHT
    assert m.score_left == 1 and m.score_right == 2
    assert m.holder == (Side.RIGHT, 9)
    assert m.ball.position == Point2(-3.0, -2.0)
    assert m.ball.velocity == Point2(-0.5, 0.25)
    for p in world.players:
        q = m.player(p.side.opponent, p.number)
        assert q.position == mirror_point(p.position)
        assert q.velocity == mirror_point(p.velocity)
        assert q.body_dir == normalize_degrees(180.0 - p.body_dir)
        assert q.role is p.role
    assert mirror_world(m) == world
