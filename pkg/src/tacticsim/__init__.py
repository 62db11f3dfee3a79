"""tacticsim: a deterministic 2D soccer simulation and evaluation benchmark.

Players choose among generated candidate actions by rating each action's
predicted outcome point against desirable target states and taking the
argmin; the benchmark compares a single-target evaluator (always the
opponent goal) with a multi-target one that partitions candidates among
tactic waypoints. Matches are seeded and bit-reproducible, and every match
can be exported as a verbose full log or a compact replay for the browser
viewer.
"""

from __future__ import annotations

from .actions import (
    Action,
    ActionParams,
    Block,
    DirectPass,
    Dribble,
    Hold,
    LeadPass,
    Move,
    ResultantState,
    Shoot,
    generate_ball_candidates,
    predict_result,
)
from .core import (
    BallState,
    Pitch,
    PlayMode,
    PlayerId,
    PlayerState,
    Point2,
    Role,
    Side,
    TacticSet,
    TacticTarget,
    WorldState,
    clamp_to_pitch,
    euclidean,
    make_world,
    mirror_point,
    mirror_world,
    normalize_degrees,
    opponent_goal_center,
)
from .engine import (
    EngineParams,
    MatchConfig,
    MatchLog,
    MatchMeta,
    MatchResult,
    TeamConfig,
    intercept_assignment,
    intercept_plan,
    kickoff_world,
    play_match,
    play_match_scores,
    step,
)
from .evaluation import (
    EvalMode,
    RatedAction,
    TacticParams,
    assign_tactic,
    decide,
    default_tactics,
    rate_baseline,
    rate_with_tactics,
    select_action,
)
from .field_control import (
    PositioningParams,
    VoronoiDiagram,
    cell_of,
    field_control_score,
    generate_move_candidates,
    polygon_area,
    polygon_centroid,
    positioning_targets,
    voronoi_partition,
    world_diagram,
)
from .formation import DEFAULT_FORMATION, FormationSlot, home_position
from .replay import (
    FormatError,
    ReplayDocument,
    ReplayFrame,
    convert_to_replay,
    full_log_text,
    parse_full_log,
    parse_replay,
    serialize_replay,
    write_full_log,
)
from .tournament import (
    GroupRecord,
    MatchRow,
    SeriesStats,
    aggregate_scores,
    compute_standings,
    points_of,
    read_match_rows,
    run_series,
    series_report,
    standings_table,
)

__version__ = "0.1.0"

__all__ = [
    "Action",
    "ActionParams",
    "BallState",
    "Block",
    "DirectPass",
    "Dribble",
    "EngineParams",
    "EvalMode",
    "FormatError",
    "FormationSlot",
    "GroupRecord",
    "Hold",
    "LeadPass",
    "MatchConfig",
    "MatchLog",
    "MatchMeta",
    "MatchResult",
    "MatchRow",
    "Move",
    "Pitch",
    "PlayMode",
    "PlayerId",
    "PlayerState",
    "Point2",
    "PositioningParams",
    "RatedAction",
    "ReplayDocument",
    "ReplayFrame",
    "ResultantState",
    "Role",
    "SeriesStats",
    "Shoot",
    "Side",
    "TacticParams",
    "TacticSet",
    "TacticTarget",
    "TeamConfig",
    "VoronoiDiagram",
    "WorldState",
    "aggregate_scores",
    "assign_tactic",
    "cell_of",
    "clamp_to_pitch",
    "compute_standings",
    "convert_to_replay",
    "decide",
    "default_tactics",
    "euclidean",
    "field_control_score",
    "full_log_text",
    "generate_ball_candidates",
    "generate_move_candidates",
    "home_position",
    "normalize_degrees",
    "intercept_assignment",
    "intercept_plan",
    "kickoff_world",
    "make_world",
    "mirror_point",
    "mirror_world",
    "opponent_goal_center",
    "parse_full_log",
    "parse_replay",
    "play_match",
    "play_match_scores",
    "points_of",
    "polygon_area",
    "polygon_centroid",
    "positioning_targets",
    "predict_result",
    "rate_baseline",
    "rate_with_tactics",
    "read_match_rows",
    "run_series",
    "select_action",
    "serialize_replay",
    "series_report",
    "standings_table",
    "step",
    "voronoi_partition",
    "world_diagram",
    "write_full_log",
    "DEFAULT_FORMATION",
]
