"""Voronoi partition of the pitch and the positioning targets built from it."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .actions import Action, Block, Move
from .core import (
    DEFAULT_PITCH,
    Pitch,
    PlayerId,
    Point2,
    Role,
    Side,
    TacticTarget,
    WorldState,
    clamp_to_pitch,
    euclidean,
)
from .formation import DEFAULT_FORMATION, FormationSlot, home_position

#: Sites closer than this are treated as coincident and deduplicated.
SITE_DEDUP_TOLERANCE = 1e-9

#: Slack for boundary membership tests in cell_of, in meters.
CELL_BOUNDARY_TOLERANCE = 1e-6


@dataclass(frozen=True, slots=True)
class VoronoiDiagram:
    """Convex cells tiling the pitch rectangle, one per (deduplicated) site.

    ``source_index`` maps each of the original input sites to its cell index,
    so callers that deduplicated nothing can ignore it.
    """

    pitch: Pitch
    sites: tuple[Point2, ...]
    cells: tuple[tuple[Point2, ...], ...]
    source_index: tuple[int, ...]
    # Unit-outward-normal half-planes (a, b, c) per cell edge: inside means
    # a*x + b*y <= c. Precomputed for fast membership tests.
    edge_planes: tuple[tuple[tuple[float, float, float], ...], ...] = field(
        repr=False, compare=False, default=()
    )


def _clip_halfplane(
    poly: list[tuple[float, float]], a: float, b: float, c: float
) -> list[tuple[float, float]]:
    """Sutherland-Hodgman clip of a convex polygon to a*x + b*y <= c."""
    out: list[tuple[float, float]] = []
    n = len(poly)
    for k in range(n):
        px, py = poly[k]
        qx, qy = poly[(k + 1) % n]
        fp = a * px + b * py - c
        fq = a * qx + b * qy - c
        if fp <= 0.0:
            out.append((px, py))
        if (fp < 0.0 < fq) or (fq < 0.0 < fp):
            t = fp / (fp - fq)
            out.append((px + t * (qx - px), py + t * (qy - py)))
    return out


def dedup_sites(
    sites: list[Point2] | tuple[Point2, ...], tolerance: float = SITE_DEDUP_TOLERANCE
) -> tuple[list[Point2], list[int]]:
    """Drop near-coincident sites, keeping the lowest index of each cluster.

    Returns (kept sites, mapping original index -> kept index).
    """
    kept: list[Point2] = []
    mapping: list[int] = []
    for s in sites:
        match = -1
        for i, k in enumerate(kept):
            if abs(s.x - k.x) <= tolerance and abs(s.y - k.y) <= tolerance:
                match = i
                break
        if match < 0:
            kept.append(s)
            match = len(kept) - 1
        mapping.append(match)
    return kept, mapping


def voronoi_partition(
    sites: list[Point2] | tuple[Point2, ...], pitch: Pitch = DEFAULT_PITCH
) -> VoronoiDiagram:
    """Half-plane intersection per site, clipped to the pitch rectangle.

    Fine for rosters of a couple dozen sites; correctness is pinned by the
    brute-force nearest-site oracle in the test suite, not by the algorithm.
    """
    if not sites:
        raise ValueError("voronoi_partition needs at least one site")
    kept, mapping = dedup_sites(sites)
    hx, hy = pitch.half_length, pitch.half_width
    rect = [(-hx, -hy), (hx, -hy), (hx, hy), (-hx, hy)]

    cells: list[tuple[Point2, ...]] = []
    planes: list[tuple[tuple[float, float, float], ...]] = []
    for i, si in enumerate(kept):
        six, siy = si.x, si.y
        others = sorted(
            (o for j, o in enumerate(kept) if j != i),
            key=lambda o: (o.x - six) * (o.x - six) + (o.y - siy) * (o.y - siy),
        )
        poly = rect
        radius = max(math.hypot(vx - six, vy - siy) for vx, vy in poly)
        for o in others:
            d = math.hypot(o.x - six, o.y - siy)
            if d / 2.0 > radius:
                break  # sorted ascending: no later site can cut the cell
            a = 2.0 * (o.x - six)
            b = 2.0 * (o.y - siy)
            c = o.x * o.x + o.y * o.y - six * six - siy * siy
            poly = _clip_halfplane(poly, a, b, c)
            if not poly:
                break
            radius = max(math.hypot(vx - six, vy - siy) for vx, vy in poly)
        cells.append(tuple(Point2(x, y) for x, y in poly))
        planes.append(_edge_planes(poly))

    return VoronoiDiagram(
        pitch=pitch,
        sites=tuple(kept),
        cells=tuple(cells),
        source_index=tuple(mapping),
        edge_planes=tuple(planes),
    )


def _edge_planes(poly: list[tuple[float, float]]) -> tuple[tuple[float, float, float], ...]:
    planes = []
    n = len(poly)
    for k in range(n):
        px, py = poly[k]
        qx, qy = poly[(k + 1) % n]
        dx, dy = qx - px, qy - py
        length = math.hypot(dx, dy)
        if length == 0.0:
            continue
        a, b = dy / length, -dx / length  # outward normal of a CCW polygon
        planes.append((a, b, a * px + b * py))
    return tuple(planes)


def cell_of(diagram: VoronoiDiagram, p: Point2) -> int:
    """Index of the cell containing p; boundary points resolve to the lowest
    adjacent site index. Errors if p lies outside the pitch."""
    hx, hy = diagram.pitch.half_length, diagram.pitch.half_width
    if not (-hx <= p.x <= hx and -hy <= p.y <= hy):
        raise ValueError(f"point ({p.x}, {p.y}) outside the pitch")
    px, py = p.x, p.y
    tol = CELL_BOUNDARY_TOLERANCE
    for idx, planes in enumerate(diagram.edge_planes):
        inside = True
        for a, b, c in planes:
            if a * px + b * py > c + tol:
                inside = False
                break
        if inside and planes:
            return idx
    # Numerical fallback for points that slip through every boundary test.
    best = 0
    best_d = euclidean(p, diagram.sites[0])
    for i in range(1, len(diagram.sites)):
        d = euclidean(p, diagram.sites[i])
        if d < best_d - tol:
            best, best_d = i, d
    return best


def polygon_area(poly: tuple[Point2, ...] | list[Point2]) -> float:
    """Shoelace area; positive for counter-clockwise polygons."""
    n = len(poly)
    if n < 3:
        return 0.0
    acc = 0.0
    for k in range(n):
        p = poly[k]
        q = poly[(k + 1) % n]
        acc += p.x * q.y - q.x * p.y
    return acc / 2.0


def polygon_centroid(poly: tuple[Point2, ...] | list[Point2]) -> Point2:
    """Area centroid of a convex polygon (falls back to the vertex mean for
    degenerate slivers)."""
    area = polygon_area(poly)
    if abs(area) < 1e-12:
        xs = sum(p.x for p in poly) / len(poly)
        ys = sum(p.y for p in poly) / len(poly)
        return Point2(xs, ys)
    cx = cy = 0.0
    n = len(poly)
    for k in range(n):
        p = poly[k]
        q = poly[(k + 1) % n]
        w = p.x * q.y - q.x * p.y
        cx += (p.x + q.x) * w
        cy += (p.y + q.y) * w
    return Point2(cx / (6.0 * area), cy / (6.0 * area))


@dataclass(frozen=True, slots=True)
class PositioningParams:
    block_count: int = 1
    block_range: float = 15.0
    gk_engage_range: float = 25.0
    wing_x_lead: float = 10.0
    wing_y_fraction: float = 0.35
    #: One-cycle travel budget used when rating movement candidates.
    step_length: float = 1.05
    formation: tuple[FormationSlot, ...] = DEFAULT_FORMATION


DEFAULT_POSITIONING_PARAMS = PositioningParams()


@dataclass(frozen=True, slots=True)
class PositioningTargets:
    entries: tuple[tuple[Action, TacticTarget], ...]


def world_diagram(world: WorldState, pitch: Pitch = DEFAULT_PITCH) -> VoronoiDiagram:
    """Voronoi partition over all 22 player positions in roster order."""
    return voronoi_partition([p.position for p in world.players], pitch)


def open_space_point(
    world: WorldState,
    player: PlayerId,
    diagram: VoronoiDiagram | None = None,
    pitch: Pitch = DEFAULT_PITCH,
) -> Point2:
    """Centroid of the player's Voronoi cell over all 22 players."""
    if diagram is None:
        diagram = world_diagram(world, pitch)
    side, number = player
    roster_idx = (0 if side is Side.LEFT else 11) + number - 1
    cell = diagram.cells[diagram.source_index[roster_idx]]
    if not cell:
        return world.player(side, number).position
    return polygon_centroid(cell)


def wing_point(
    world: WorldState,
    player: PlayerId,
    params: PositioningParams = DEFAULT_POSITIONING_PARAMS,
    pitch: Pitch = DEFAULT_PITCH,
) -> Point2:
    """Wing-lane point ahead of the ball, on the player's own y side."""
    side, number = player
    me = world.player(side, number)
    x = world.ball.position.x + side.attack_sign * params.wing_x_lead
    y_sign = 1.0 if me.position.y >= 0 else -1.0
    y = y_sign * params.wing_y_fraction * pitch.width
    return clamp_to_pitch(Point2(x, y), pitch)


def positioning_targets(
    world: WorldState,
    player: PlayerId,
    params: PositioningParams = DEFAULT_POSITIONING_PARAMS,
    diagram: VoronoiDiagram | None = None,
    pitch: Pitch = DEFAULT_PITCH,
) -> PositioningTargets:
    """Movement candidates for an off-ball player, each paired with the
    desirable state it pursues.

    Support entries: open space (Voronoi cell centroid), wing lane, and the
    formation home. Block entries cover the nearest opponents within range,
    each aiming at the midpoint between that opponent and the ball. A keeper
    far from play falls back to its home alone.
    """
    side, number = player
    if world.holder == player:
        raise ValueError("positioning targets are for off-ball players; the holder kicks")
    me = world.player(side, number)
    ball = world.ball.position
    home = home_position(side, number, ball.x, pitch, params.formation)

    if me.role is Role.GOALKEEPER and euclidean(me.position, ball) > params.gk_engage_range:
        entry = (Move(home), TacticTarget("home", home))
        return PositioningTargets(entries=(entry,))

    entries: list[tuple[Action, TacticTarget]] = []
    open_pt = open_space_point(world, player, diagram, pitch)
    entries.append((Move(open_pt), TacticTarget("open-space", open_pt)))
    wing = wing_point(world, player, params, pitch)
    entries.append((Move(wing), TacticTarget("wing", wing)))
    entries.append((Move(home), TacticTarget("home", home)))

    if params.block_count > 0:
        in_range = []
        for opp in world.players_of(side.opponent):
            d = euclidean(me.position, opp.position)
            if d <= params.block_range:
                in_range.append((d, opp.number))
        in_range.sort()
        for rank, (_, opp_number) in enumerate(in_range[: params.block_count]):
            opp = world.player(side.opponent, opp_number)
            mid = Point2((opp.position.x + ball.x) / 2.0, (opp.position.y + ball.y) / 2.0)
            label = "block" if rank == 0 else f"block-{rank + 1}"
            entries.append((Block((side.opponent, opp_number)), TacticTarget(label, mid)))

    return PositioningTargets(entries=tuple(entries))


def generate_move_candidates(
    world: WorldState,
    player: PlayerId,
    params: PositioningParams = DEFAULT_POSITIONING_PARAMS,
    diagram: VoronoiDiagram | None = None,
    pitch: Pitch = DEFAULT_PITCH,
) -> list[Action]:
    """The actions of positioning_targets without their paired targets."""
    targets = positioning_targets(world, player, params, diagram, pitch)
    return [action for action, _ in targets.entries]


def field_control_score(
    world: WorldState, side: Side, pitch: Pitch = DEFAULT_PITCH
) -> float:
    """Fraction of pitch area covered by this side's Voronoi cells."""
    diagram = world_diagram(world, pitch)
    owned = 0.0
    credited: set[int] = set()
    for roster_idx in range(22):
        cell_idx = diagram.source_index[roster_idx]
        if cell_idx in credited:
            continue
        credited.add(cell_idx)
        owner_is_left = roster_idx < 11
        if (side is Side.LEFT) == owner_is_left:
            owned += abs(polygon_area(diagram.cells[cell_idx]))
    return owned / (pitch.length * pitch.width)
