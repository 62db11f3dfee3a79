"""Team configuration documents and built-in presets.

Documents are `key = value` text with one section per team; the section name
is the team name. Bare keys set team-level fields, dotted keys set parameter
groups::

    [Sharks]
    evaluator = tactics
    x_weight = 0.0
    tactics.center_x = 36.0
    actions.pass_range = 30.0
    positioning.block_count = 1

Unknown keys are rejected so typos cannot silently fall back to defaults.
"""

from __future__ import annotations

import configparser
import dataclasses

from .actions import ActionParams
from .engine import TeamConfig
from .evaluation import EvalMode, TacticParams
from .field_control import PositioningParams

PRESET_NAMES = ("tactics", "baseline")


class ConfigError(ValueError):
    """Malformed or contradictory team configuration document."""


def team_preset(name: str) -> TeamConfig:
    """Built-in team: 'tactics' or 'baseline', all parameters at defaults."""
    if name == "tactics":
        return TeamConfig(name="Tactics", evaluator_mode=EvalMode.TACTICS)
    if name == "baseline":
        return TeamConfig(name="Baseline", evaluator_mode=EvalMode.BASELINE)
    raise ConfigError(f"unknown preset {name!r} (expected one of {', '.join(PRESET_NAMES)})")


_GROUPS = {
    "tactics": ("tactic_params", TacticParams),
    "actions": ("action_params", ActionParams),
    "positioning": ("positioning_params", PositioningParams),
}
_TEAM_KEYS = {"evaluator", "x_weight"}


def _parse_value(section: str, key: str, raw: str, kind: type) -> object:
    try:
        if kind is int:
            return int(raw)
        if kind is float:
            return float(raw)
    except ValueError:
        raise ConfigError(f"[{section}] {key}: malformed {kind.__name__} {raw!r}") from None
    raise ConfigError(f"[{section}] {key}: unsupported value type")


def _team_from_section(section: str, items: dict[str, str]) -> TeamConfig:
    mode = EvalMode.TACTICS
    x_weight = 0.0
    group_overrides: dict[str, dict[str, object]] = {g: {} for g in _GROUPS}

    for key, raw in items.items():
        group, dot, field_name = key.partition(".")
        if not dot:
            if key == "evaluator":
                try:
                    mode = EvalMode(raw)
                except ValueError:
                    raise ConfigError(
                        f"[{section}] evaluator: expected 'tactics' or 'baseline', got {raw!r}"
                    ) from None
            elif key == "x_weight":
                x_weight = _parse_value(section, key, raw, float)
            else:
                raise ConfigError(f"[{section}] unknown key {key!r}")
            continue
        if group not in _GROUPS:
            raise ConfigError(f"[{section}] unknown parameter group {group!r} in {key!r}")
        _, params_type = _GROUPS[group]
        fields = {f.name: f for f in dataclasses.fields(params_type)}
        if field_name not in fields or fields[field_name].name == "formation":
            raise ConfigError(f"[{section}] unknown key {key!r}")
        kind = int if fields[field_name].type == "int" else float
        group_overrides[group][field_name] = _parse_value(section, key, raw, kind)

    kwargs: dict[str, object] = {
        "name": section,
        "evaluator_mode": mode,
        "x_weight": x_weight,
    }
    for group, (attr, params_type) in _GROUPS.items():
        if group_overrides[group]:
            kwargs[attr] = params_type(**group_overrides[group])
    try:
        return TeamConfig(**kwargs)
    except ValueError as exc:
        raise ConfigError(f"[{section}] {exc}") from None


def parse_team_configs(text: str) -> dict[str, TeamConfig]:
    """All teams in a document, keyed by name in document order."""
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(str(exc)) from None
    if not parser.sections():
        raise ConfigError("document defines no team sections")
    return {
        name: _team_from_section(name, dict(parser.items(name)))
        for name in parser.sections()
    }


def parse_single_team(text: str) -> TeamConfig:
    """The one team a document defines; error if it defines several."""
    teams = parse_team_configs(text)
    if len(teams) != 1:
        raise ConfigError(
            f"expected exactly one team section, found {len(teams)}: "
            + ", ".join(teams)
        )
    return next(iter(teams.values()))
