"""Airframe physics: mass/thrust bookkeeping and acceleration estimates.

Maps the physical configuration (frame, rotors, payload items, heatsink
sized from compute TDP) to the acceleration input of the safe-velocity
model. Masses are grams and thrust is gram-force at this boundary; the
budget converts once to SI and everything downstream stays SI.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .model import BodyDynamics, safe_velocity

GRAVITY = 9.81  # m/s^2, fixed model constant
GRAM_FORCE_N = 9.81e-3  # 1 gf = 9.81 mN with the fixed gravity above
HEATSINK_GRAMS_PER_WATT = 5.4  # linear heatsink sizing coefficient


class CannotClimbError(Exception):
    """Thrust does not exceed weight; no positive acceleration exists."""

    def __init__(self, message: str, thrust_to_weight: float):
        super().__init__(message)
        self.thrust_to_weight = thrust_to_weight


class PayloadKind(str, Enum):
    COMPUTE = "compute"
    SENSOR = "sensor"
    BATTERY = "battery"
    HEATSINK = "heatsink"
    CALIBRATION_WEIGHT = "calibration_weight"
    OTHER = "other"


class AccelerationStrategy(str, Enum):
    #: a = (T - m g) / m, the climb headroom; conservative default.
    VERTICAL_HEADROOM = "vertical_headroom"
    #: a = g sqrt((T/(m g))^2 - 1), tilting while holding altitude.
    PITCH_LIMITED = "pitch_limited"


@dataclass(frozen=True)
class AirframeSpec:
    """Frame + motors + ESC, without payload."""

    base_mass_g: float
    rotor_count: int
    per_rotor_pull_gf: float
    control_rate_hz: float

    def __post_init__(self):
        if self.base_mass_g <= 0:
            raise ValueError(f"base_mass_g must be > 0, got {self.base_mass_g}")
        if self.rotor_count < 1:
            raise ValueError(f"rotor_count must be >= 1, got {self.rotor_count}")
        if self.per_rotor_pull_gf <= 0:
            raise ValueError(f"per_rotor_pull_gf must be > 0, got {self.per_rotor_pull_gf}")
        if self.control_rate_hz <= 0:
            raise ValueError(f"control_rate_hz must be > 0, got {self.control_rate_hz}")


@dataclass(frozen=True)
class PayloadItem:
    name: str
    mass_g: float
    kind: PayloadKind = PayloadKind.OTHER

    def __post_init__(self):
        if self.mass_g < 0:
            raise ValueError(f"payload mass_g must be >= 0, got {self.mass_g}")
        object.__setattr__(self, "kind", PayloadKind(self.kind))


@dataclass(frozen=True)
class MassBudget:
    """Resolved takeoff totals in SI units."""

    total_mass_kg: float
    total_thrust_n: float
    thrust_to_weight: float

    def __post_init__(self):
        if self.total_mass_kg <= 0:
            raise ValueError(f"total_mass_kg must be > 0, got {self.total_mass_kg}")
        expected = self.total_thrust_n / (self.total_mass_kg * GRAVITY)
        if abs(self.thrust_to_weight - expected) > 1e-12 * max(1.0, abs(expected)):
            raise ValueError("thrust_to_weight inconsistent with thrust and mass")


@dataclass(frozen=True)
class AccelerationModel:
    """How to turn a mass budget into a_max.

    ``declared_a_max`` short-circuits the strategy entirely: it is used
    for airframes whose acceleration is known from calibration rather
    than derivable from mass and thrust.
    """

    strategy: AccelerationStrategy = AccelerationStrategy.VERTICAL_HEADROOM
    declared_a_max: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "strategy", AccelerationStrategy(self.strategy))
        if self.declared_a_max is not None and self.declared_a_max <= 0:
            raise ValueError(f"declared_a_max must be > 0, got {self.declared_a_max}")


def heatsink_mass(tdp_w: float) -> float:
    """Heatsink mass in grams for a given TDP, under the linear model."""
    if tdp_w < 0:
        raise ValueError(f"tdp_w must be >= 0, got {tdp_w}")
    return HEATSINK_GRAMS_PER_WATT * tdp_w


def mass_budget(airframe: AirframeSpec, payload: Iterable[PayloadItem]) -> MassBudget:
    """Total takeoff mass and thrust, converted to SI."""
    total_g = airframe.base_mass_g + sum(item.mass_g for item in payload)
    total_mass_kg = total_g / 1000.0
    total_thrust_n = airframe.rotor_count * airframe.per_rotor_pull_gf * GRAM_FORCE_N
    return MassBudget(
        total_mass_kg=total_mass_kg,
        total_thrust_n=total_thrust_n,
        thrust_to_weight=total_thrust_n / (total_mass_kg * GRAVITY),
    )


def estimate_a_max(budget: MassBudget, model: AccelerationModel) -> float:
    """Maximum acceleration for a budget under the chosen strategy.

    Raises :class:`CannotClimbError` when thrust is below weight. Exact
    thrust == weight returns 0.0 (zero headroom, both strategies).
    """
    if model.declared_a_max is not None:
        return model.declared_a_max
    ttw = budget.thrust_to_weight
    if ttw < 1.0:
        raise CannotClimbError(
            f"thrust {budget.total_thrust_n:.3f} N cannot lift "
            f"{budget.total_mass_kg:.3f} kg (thrust-to-weight {ttw:.3f})",
            thrust_to_weight=ttw,
        )
    if model.strategy is AccelerationStrategy.VERTICAL_HEADROOM:
        return (budget.total_thrust_n - budget.total_mass_kg * GRAVITY) / budget.total_mass_kg
    return GRAVITY * math.sqrt(ttw * ttw - 1.0)


@dataclass(frozen=True)
class PayloadSweepPoint:
    payload_mass_g: float
    velocity_mps: Optional[float]
    feasible: bool


def payload_velocity_curve(
    airframe: AirframeSpec,
    base_payload: Sequence[PayloadItem],
    sweep_mass_g: Iterable[float],
    sense_range_m: float,
    action_period_s: float,
    model: AccelerationModel = AccelerationModel(),
) -> list[PayloadSweepPoint]:
    """Safe velocity as a function of added payload mass.

    Each sweep value adds that many grams on top of ``base_payload``.
    Masses past the cannot-climb point stay in the result flagged
    infeasible rather than being dropped.
    """
    points = []
    for mass_g in sweep_mass_g:
        items = list(base_payload) + [PayloadItem("swept payload", mass_g)]
        budget = mass_budget(airframe, items)
        try:
            a_max = estimate_a_max(budget, model)
        except CannotClimbError:
            points.append(PayloadSweepPoint(mass_g, None, feasible=False))
            continue
        if a_max <= 0.0:
            points.append(PayloadSweepPoint(mass_g, None, feasible=False))
            continue
        dyn = BodyDynamics(a_max=a_max, sense_range=sense_range_m)
        points.append(PayloadSweepPoint(mass_g, safe_velocity(dyn, action_period_s), feasible=True))
    return points
