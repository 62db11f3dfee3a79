"""Role home positions: a static 4-3-3 shape with ball-following attraction."""

from __future__ import annotations

from dataclasses import dataclass

from .core import DEFAULT_PITCH, Pitch, Point2, Role, Side


@dataclass(frozen=True, slots=True)
class FormationSlot:
    number: int
    role: Role
    home_x: float
    home_y: float


#: Home positions in the left-attacking frame; the right team uses the same
#: slots with x negated (pure x-mirror keeps side-swapped matches bit-exact).
DEFAULT_FORMATION: tuple[FormationSlot, ...] = (
    FormationSlot(1, Role.GOALKEEPER, -49.5, 0.0),
    FormationSlot(2, Role.DEFENDER, -33.0, 22.0),
    FormationSlot(3, Role.DEFENDER, -35.0, 8.0),
    FormationSlot(4, Role.DEFENDER, -35.0, -8.0),
    FormationSlot(5, Role.DEFENDER, -33.0, -22.0),
    FormationSlot(6, Role.MIDFIELDER, -18.0, 0.0),
    FormationSlot(7, Role.MIDFIELDER, -15.0, 15.0),
    FormationSlot(8, Role.MIDFIELDER, -15.0, -15.0),
    FormationSlot(9, Role.FORWARD, -5.0, 0.0),
    FormationSlot(10, Role.FORWARD, -8.0, 18.0),
    FormationSlot(11, Role.FORWARD, -8.0, -18.0),
)

#: How strongly home positions follow the ball along x.
BALL_ATTRACTION = 0.3

# Allowed x band per role in the left-attacking frame (offsets from the goal
# lines scale with the pitch so small pitches stay playable).
_ROLE_BAND = {
    Role.GOALKEEPER: (1.0, 8.5),
    Role.DEFENDER: (4.5, 44.5),
    Role.MIDFIELDER: (22.5, 67.5),
    Role.FORWARD: (37.5, 97.0),
}


def _band_for(role: Role, pitch: Pitch) -> tuple[float, float]:
    lo_off, hi_off = _ROLE_BAND[role]
    return (-pitch.half_length + lo_off, -pitch.half_length + hi_off)


def slot_for(number: int, formation: tuple[FormationSlot, ...] = DEFAULT_FORMATION) -> FormationSlot:
    slot = formation[number - 1]
    if slot.number != number:  # formation tuples are kept in number order
        raise ValueError(f"formation slot {number} out of order")
    return slot


def home_position(
    side: Side,
    number: int,
    ball_x: float,
    pitch: Pitch = DEFAULT_PITCH,
    formation: tuple[FormationSlot, ...] = DEFAULT_FORMATION,
) -> Point2:
    """Home point for a player, shifted toward the ball x within the role band.

    Computed in the left frame and mirrored by x-negation, so the result for
    the right team is the exact mirror of the left team's.
    """
    slot = slot_for(number, formation)
    bx = ball_x * side.attack_sign
    lo, hi = _band_for(slot.role, pitch)
    x = slot.home_x + BALL_ATTRACTION * bx
    if x < lo:
        x = lo
    elif x > hi:
        x = hi
    return Point2(side.attack_sign * x, slot.home_y)


def validate_formation(formation: tuple[FormationSlot, ...]) -> None:
    """Reject rosters without 11 slots numbered 1..11 with exactly one keeper."""
    if len(formation) != 11:
        raise ValueError(f"formation needs 11 slots, got {len(formation)}")
    numbers = [s.number for s in formation]
    if numbers != list(range(1, 12)):
        raise ValueError(f"formation slots must be numbered 1..11 in order, got {numbers}")
    keepers = sum(1 for s in formation if s.role is Role.GOALKEEPER)
    if keepers != 1:
        raise ValueError(f"formation needs exactly one goalkeeper, got {keepers}")
