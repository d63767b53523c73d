"""Closed-form safe-velocity model for the sense-compute-control pipeline.

The model couples three things: the decision rate of the pipeline (bounded
by its slowest stage), the distance at which obstacles become visible, and
the braking acceleration the airframe can deliver. From those it answers
the question "how fast can this vehicle fly and still stop in time?" and
locates the knee throughput beyond which a faster pipeline buys nothing.

All math here is in SI units (seconds, meters, m/s^2). Everything is a
pure function over frozen value types and safe to call from any thread.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_KNEE_THRESHOLD = 0.985


class DegenerateRooflineError(ValueError):
    """Raised when no roofline exists (zero sensing range)."""


class UnattainableVelocityError(ValueError):
    """Raised when a requested velocity lies outside the reachable band."""


def _require_finite(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class PipelineTiming:
    """Per-stage latencies of the sense-compute-control pipeline, in seconds."""

    sensor_period: float
    compute_period: float
    control_period: float

    def __post_init__(self):
        for name in ("sensor_period", "compute_period", "control_period"):
            value = _require_finite(getattr(self, name), name)
            if value <= 0.0:
                raise ValueError(f"{name} must be > 0, got {value}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_rates(cls, sensor_hz: float, compute_hz: float, control_hz: float) -> "PipelineTiming":
        """Build from stage rates in hertz (the usual spec-sheet view)."""
        for name, value in (("sensor_hz", sensor_hz), ("compute_hz", compute_hz), ("control_hz", control_hz)):
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be a positive finite rate, got {value!r}")
        return cls(1.0 / sensor_hz, 1.0 / compute_hz, 1.0 / control_hz)

    @property
    def sensor_rate(self) -> float:
        return 1.0 / self.sensor_period

    @property
    def compute_rate(self) -> float:
        return 1.0 / self.compute_period

    @property
    def control_rate(self) -> float:
        return 1.0 / self.control_period


@dataclass(frozen=True)
class BodyDynamics:
    """Physics inputs of the model: braking acceleration and sensing range.

    a_max:       maximum achievable acceleration, m/s^2 (> 0)
    sense_range: distance at which obstacles are detected, m (>= 0)
    """

    a_max: float
    sense_range: float

    def __post_init__(self):
        a = _require_finite(self.a_max, "a_max")
        d = _require_finite(self.sense_range, "sense_range")
        if a <= 0.0:
            raise ValueError(f"a_max must be > 0, got {a}")
        if d < 0.0:
            raise ValueError(f"sense_range must be >= 0, got {d}")
        object.__setattr__(self, "a_max", a)
        object.__setattr__(self, "sense_range", d)


@dataclass(frozen=True)
class ActionTiming:
    """One end-to-end decision interval and its reciprocal throughput."""

    action_period: float
    action_throughput: float

    def __post_init__(self):
        period = _require_finite(self.action_period, "action_period")
        rate = _require_finite(self.action_throughput, "action_throughput")
        if period <= 0.0:
            raise ValueError(f"action_period must be > 0, got {period}")
        if abs(rate * period - 1.0) > 1e-12:
            raise ValueError("action_throughput must equal 1/action_period")

    @classmethod
    def from_period(cls, period: float) -> "ActionTiming":
        return cls(period, 1.0 / period)

    @classmethod
    def from_throughput(cls, rate: float) -> "ActionTiming":
        return cls(1.0 / rate, rate)


@dataclass(frozen=True)
class KneePoint:
    """The throughput beyond which the velocity curve is effectively flat.

    The knee is parameterized: it is the throughput at which the safe
    velocity reaches ``threshold`` times the asymptotic velocity.
    """

    knee_throughput: float
    knee_velocity: float
    asymptote_velocity: float
    threshold: float

    def __post_init__(self):
        if not (0.0 < self.threshold < 1.0):
            raise ValueError(f"threshold must be in (0, 1), got {self.threshold}")
        if self.knee_throughput <= 0.0:
            raise ValueError(f"knee_throughput must be > 0, got {self.knee_throughput}")


def action_period_bounds(timing: PipelineTiming) -> tuple[float, float]:
    """Bracket the end-to-end decision interval.

    With fully overlapped stages the pipeline can never beat its slowest
    stage; with no overlap it can never be worse than the stage sum.
    Returns ``(max of periods, sum of periods)``.
    """
    periods = (timing.sensor_period, timing.compute_period, timing.control_period)
    return max(periods), sum(periods)


def action_throughput(timing: PipelineTiming) -> float:
    """Best-case decision rate: the minimum of the three stage rates."""
    return min(timing.sensor_rate, timing.compute_rate, timing.control_rate)


def safe_velocity(dyn: BodyDynamics, action_period: float) -> float:
    """Fastest speed from which the vehicle can still stop within its range.

    Evaluates ``a_max * (sqrt(T^2 + 2 d / a_max) - T)``: the vehicle
    coasts for one decision interval T before it can react, then brakes
    at a_max; the returned speed makes the total distance exactly the
    sensing range. Strictly decreasing in T; T = 0 gives the asymptote.
    """
    T = _require_finite(action_period, "action_period")
    if T < 0.0:
        raise ValueError(f"action_period must be >= 0, got {T}")
    d = dyn.sense_range
    if d == 0.0:
        return 0.0
    # Algebraically equal to a*(sqrt(T^2 + 2d/a) - T) but free of the
    # large-T cancellation.
    return 2.0 * d / (math.sqrt(T * T + 2.0 * d / dyn.a_max) + T)


def asymptote_velocity(dyn: BodyDynamics) -> float:
    """Velocity ceiling as the decision interval goes to zero: sqrt(2 d a)."""
    return math.sqrt(2.0 * dyn.sense_range * dyn.a_max)


def safe_velocity_slope(dyn: BodyDynamics, action_period: float) -> float:
    """Analytic dv/dT of the safe-velocity curve (strictly negative)."""
    T = float(action_period)
    return dyn.a_max * (T / math.sqrt(T * T + 2.0 * dyn.sense_range / dyn.a_max) - 1.0)


def action_period_for_velocity(dyn: BodyDynamics, velocity: float) -> float:
    """Invert the safe-velocity curve: the decision interval that yields v.

    Only velocities strictly between 0 and the asymptote are reachable at
    a finite positive interval; anything else raises
    :class:`UnattainableVelocityError`.
    """
    v = _require_finite(velocity, "velocity")
    ceiling = asymptote_velocity(dyn)
    if v <= 0.0 or v >= ceiling:
        raise UnattainableVelocityError(
            f"velocity {v} m/s is outside the reachable band (0, {ceiling}) m/s"
        )
    return dyn.sense_range / v - v / (2.0 * dyn.a_max)


def knee_point(dyn: BodyDynamics, threshold: float = DEFAULT_KNEE_THRESHOLD) -> KneePoint:
    """Locate the knee: where the curve reaches ``threshold`` x asymptote."""
    if not (0.0 < threshold < 1.0):
        raise ValueError(f"threshold must be in (0, 1), got {threshold}")
    if dyn.sense_range == 0.0:
        raise DegenerateRooflineError("sense_range is 0; no roofline exists")
    ceiling = asymptote_velocity(dyn)
    knee_velocity = threshold * ceiling
    period = action_period_for_velocity(dyn, knee_velocity)
    return KneePoint(
        knee_throughput=1.0 / period,
        knee_velocity=knee_velocity,
        asymptote_velocity=ceiling,
        threshold=threshold,
    )


def calibrate_a_max(velocity: float, action_period: float, sense_range: float) -> float:
    """Back-solve the acceleration that produces a known (v, T, d) point.

    Inverts the safe-velocity relation for a_max. Requires ``v * T < d``:
    a vehicle that covers the whole sensing range within one decision
    interval cannot stop for anything.
    """
    v = _require_finite(velocity, "velocity")
    T = _require_finite(action_period, "action_period")
    d = _require_finite(sense_range, "sense_range")
    if v <= 0.0:
        raise ValueError(f"velocity must be > 0, got {v}")
    if T < 0.0:
        raise ValueError(f"action_period must be >= 0, got {T}")
    if v * T >= d:
        raise UnattainableVelocityError(
            f"v*T = {v * T:.6g} m >= sense_range {d:.6g} m: "
            "the vehicle overruns the obstacle within one decision interval"
        )
    return v * v / (2.0 * (d - v * T))
