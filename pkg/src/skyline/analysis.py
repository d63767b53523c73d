"""Full-system bottleneck analysis: bounds, gaps, rooflines, sweeps.

Composes the physics and closed-form velocity layers into the reports the
tooling exposes: which subsystem limits the safe velocity, how far the
design sits from the knee, and sampled curves for plotting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Optional, Sequence

from .catalog import PresetStore, UavConfiguration
from .model import (
    BodyDynamics,
    KneePoint,
    PipelineTiming,
    action_throughput,
    knee_point,
    safe_velocity,
)
from .physics import CannotClimbError

#: relative band around gap 1.0 still reported as a balanced design
BALANCED_BAND = 0.05


class BoundKind(str, Enum):
    PHYSICS = "PhysicsBound"
    SENSOR = "SensorBound"
    COMPUTE = "ComputeBound"
    CONTROL = "ControlBound"


class GapDirection(str, Enum):
    UNDER_PROVISIONED = "under_provisioned"
    OVER_PROVISIONED = "over_provisioned"
    BALANCED = "balanced"


@dataclass(frozen=True)
class BoundClass:
    kind: BoundKind
    ceiling_velocity: float
    limiting_rate: float


@dataclass(frozen=True)
class F1Analysis:
    """One design point, fully characterized."""

    config_name: str
    knee: KneePoint
    f_action_hz: float
    v_safe_mps: float
    bound: BoundClass
    gap_ratio: float
    gap_direction: GapDirection
    recommendations: tuple[str, ...]
    # component rates and physics context, for reports
    sensor_rate_hz: float
    compute_rate_hz: float
    control_rate_hz: float
    a_max_mps2: float
    sense_range_m: float
    total_mass_kg: float
    thrust_to_weight: float


@dataclass(frozen=True)
class CeilingMarker:
    """A component whose rate sits below the knee and caps the velocity."""

    label: str
    rate_hz: float
    ceiling_velocity_mps: float


@dataclass(frozen=True)
class RooflineSeries:
    """Sampled (throughput, velocity) curve plus its roof and markers.

    ``velocities_mps`` are raw curve values; the roof is the horizontal
    asymptote the curve approaches, and the knee marks where the curve
    reaches threshold x asymptote.
    """

    label: str
    frequencies_hz: tuple[float, ...]
    velocities_mps: tuple[float, ...]
    roof_velocity_mps: float
    knee: KneePoint
    ceilings: tuple[CeilingMarker, ...]
    scale: str = "log"


@dataclass(frozen=True)
class SweepPoint:
    knob: str
    value: float | str
    analysis: Optional[F1Analysis]
    error: Optional[str] = None


@dataclass(frozen=True)
class Comparison:
    series: tuple[RooflineSeries, ...]
    analyses: tuple[F1Analysis, ...]


def classify_bound(timing: PipelineTiming, knee: KneePoint, dyn: BodyDynamics) -> BoundClass:
    """Name the subsystem that limits the safe velocity.

    At or beyond the knee the physics caps the velocity; below it, the
    slowest pipeline stage does. Rate ties break toward the upstream
    stage (sensor before compute before control) since an upstream stall
    starves everything after it.
    """
    f_action = action_throughput(timing)
    ceiling = safe_velocity(dyn, 1.0 / f_action)
    # the 1e-12 slop absorbs reciprocal round-trip ulps when a rate was
    # pinned exactly at the knee
    if f_action >= knee.knee_throughput * (1.0 - 1e-12):
        return BoundClass(BoundKind.PHYSICS, ceiling_velocity=ceiling, limiting_rate=f_action)
    for kind, rate in (
        (BoundKind.SENSOR, timing.sensor_rate),
        (BoundKind.COMPUTE, timing.compute_rate),
        (BoundKind.CONTROL, timing.control_rate),
    ):
        if rate == f_action:
            return BoundClass(kind, ceiling_velocity=ceiling, limiting_rate=rate)
    raise AssertionError("unreachable: some component rate equals the minimum")


def optimization_gap(component_rate_hz: float, knee_rate_hz: float) -> tuple[float, GapDirection]:
    """How far a component sits from the knee, as a ratio >= 1."""
    if component_rate_hz <= 0 or knee_rate_hz <= 0:
        raise ValueError("rates must be > 0")
    r = component_rate_hz / knee_rate_hz
    ratio = max(r, 1.0 / r)
    if abs(ratio - 1.0) <= BALANCED_BAND:
        return ratio, GapDirection.BALANCED
    return ratio, (GapDirection.OVER_PROVISIONED if r > 1.0 else GapDirection.UNDER_PROVISIONED)


_BOUND_LABEL = {
    BoundKind.SENSOR: "sensor",
    BoundKind.COMPUTE: "compute",
    BoundKind.CONTROL: "control",
}


def recommendations(
    bound: BoundClass,
    gap_ratio: float,
    gap_direction: GapDirection,
    knee: KneePoint,
) -> tuple[str, ...]:
    """Deterministic optimization tips for a classified design point."""
    if gap_direction is GapDirection.BALANCED:
        return ("balanced design: action throughput sits at the knee",)
    tips = []
    if gap_direction is GapDirection.UNDER_PROVISIONED:
        component = _BOUND_LABEL.get(bound.kind, "pipeline")
        tips.append(
            f"improve {component} throughput by {gap_ratio:.1f}x "
            f"to reach the knee at {knee.knee_throughput:.1f} Hz"
        )
    else:
        tips.append(
            f"trade the {gap_ratio:.1f}x excess compute for a lower TDP: "
            "a smaller heatsink cuts payload mass and raises the roofline"
        )
    if bound.kind is BoundKind.PHYSICS:
        tips.append("increase thrust-to-weight or reduce payload to raise the physics roof")
    return tuple(tips)


def analyze(config: UavConfiguration) -> F1Analysis:
    """Characterize one configuration end to end.

    The optimization gap is knee/actual for an under-provisioned pipeline
    and compute/knee when the design is already physics-bound (the
    compute platform being the component a designer would trade down).
    """
    timing = config.pipeline_timing()
    dyn = config.body_dynamics()
    budget = config.mass_budget()
    knee = knee_point(dyn, config.knee_threshold)
    f_action = action_throughput(timing)
    v_safe = safe_velocity(dyn, 1.0 / f_action)
    bound = classify_bound(timing, knee, dyn)
    if bound.kind is BoundKind.PHYSICS:
        # compute_rate >= f_action >= knee here, so the direction is
        # over-provisioned or balanced, never under.
        gap_ratio, gap_direction = optimization_gap(timing.compute_rate, knee.knee_throughput)
    else:
        gap_ratio = knee.knee_throughput / f_action
        gap_direction = GapDirection.UNDER_PROVISIONED
    return F1Analysis(
        config_name=config.name,
        knee=knee,
        f_action_hz=f_action,
        v_safe_mps=v_safe,
        bound=bound,
        gap_ratio=gap_ratio,
        gap_direction=gap_direction,
        recommendations=recommendations(bound, gap_ratio, gap_direction, knee),
        sensor_rate_hz=timing.sensor_rate,
        compute_rate_hz=timing.compute_rate,
        control_rate_hz=timing.control_rate,
        a_max_mps2=dyn.a_max,
        sense_range_m=dyn.sense_range,
        total_mass_kg=budget.total_mass_kg,
        thrust_to_weight=budget.thrust_to_weight,
    )


def _sample_grid(f_min_hz: float, f_max_hz: float, samples: int, scale: str) -> tuple[float, ...]:
    if not (0.0 < f_min_hz < f_max_hz):
        raise ValueError(f"need 0 < f_min < f_max, got ({f_min_hz}, {f_max_hz})")
    if samples < 2:
        raise ValueError(f"samples must be >= 2, got {samples}")
    if scale == "log":
        lo, hi = math.log(f_min_hz), math.log(f_max_hz)
        grid = [math.exp(lo + (hi - lo) * i / (samples - 1)) for i in range(samples)]
    elif scale == "linear":
        grid = [f_min_hz + (f_max_hz - f_min_hz) * i / (samples - 1) for i in range(samples)]
    else:
        raise ValueError(f"scale must be 'log' or 'linear', got {scale!r}")
    # pin the endpoints exactly; exp/log round-trips drift in the last ulps
    grid[0], grid[-1] = f_min_hz, f_max_hz
    return tuple(grid)


def roofline_series(
    config: UavConfiguration,
    f_range_hz: tuple[float, float],
    samples: int = 200,
    scale: str = "log",
) -> RooflineSeries:
    """Sample the velocity curve of a configuration over a throughput range."""
    dyn = config.body_dynamics()
    timing = config.pipeline_timing()
    knee = knee_point(dyn, config.knee_threshold)
    grid = _sample_grid(f_range_hz[0], f_range_hz[1], samples, scale)
    velocities = tuple(safe_velocity(dyn, 1.0 / f) for f in grid)
    ceilings = tuple(
        CeilingMarker(label, rate, safe_velocity(dyn, 1.0 / rate))
        for label, rate in (
            ("sensor", timing.sensor_rate),
            ("compute", timing.compute_rate),
            ("control", timing.control_rate),
        )
        if rate < knee.knee_throughput
    )
    return RooflineSeries(
        label=config.name,
        frequencies_hz=grid,
        velocities_mps=velocities,
        roof_velocity_mps=knee.asymptote_velocity,
        knee=knee,
        ceilings=ceilings,
        scale=scale,
    )


# The eight interactive knobs: how each one rewrites a configuration.

def _set_sensor_framerate(config: UavConfiguration, value: float) -> UavConfiguration:
    return replace(config, sensor=replace(config.sensor, framerate_hz=float(value)))


def _set_sensor_range(config: UavConfiguration, value: float) -> UavConfiguration:
    return replace(config, sensor=replace(config.sensor, range_m=float(value)))


def _set_tdp(config: UavConfiguration, value: float) -> UavConfiguration:
    if config.platform is None:
        raise ValueError("config has no compute platform; cannot sweep TDP")
    # drop any explicit heatsink mass so the linear model tracks the new TDP
    return replace(config, platform=replace(config.platform, tdp_w=float(value), heatsink_mass_g=None))


def _set_runtime(config: UavConfiguration, value: float) -> UavConfiguration:
    if float(value) <= 0:
        raise ValueError(f"runtime must be > 0, got {value}")
    return replace(config, algorithm=replace(config.algorithm, throughput_hz=1.0 / float(value)))


def _set_drone_weight(config: UavConfiguration, value: float) -> UavConfiguration:
    return replace(config, airframe=replace(config.airframe, base_mass_g=float(value)))


def _set_rotor_pull(config: UavConfiguration, value: float) -> UavConfiguration:
    return replace(config, airframe=replace(config.airframe, per_rotor_pull_gf=float(value)))


def _set_payload_weight(config: UavConfiguration, value: float) -> UavConfiguration:
    return replace(config, payload_override_g=float(value))


KNOBS = {
    "sensor_framerate_hz": _set_sensor_framerate,
    "sensor_range_m": _set_sensor_range,
    "compute_tdp_w": _set_tdp,
    "compute_runtime_s": _set_runtime,
    "drone_weight_g": _set_drone_weight,
    "rotor_pull_gf": _set_rotor_pull,
    "payload_weight_g": _set_payload_weight,
    "algorithm": None,  # needs the preset store; handled in apply_knob
}


def apply_knob(
    config: UavConfiguration,
    knob: str,
    value: "float | str",
    store: Optional[PresetStore] = None,
) -> UavConfiguration:
    """Return a copy of the configuration with one knob rewritten."""
    if knob not in KNOBS:
        raise ValueError(f"unknown knob {knob!r}; expected one of {sorted(KNOBS)}")
    if knob == "algorithm":
        if store is None:
            raise ValueError("the algorithm knob needs a preset store for benchmark lookups")
        if config.platform is None:
            raise ValueError("config has no compute platform; cannot look up an algorithm benchmark")
        row = store.algorithm_perf(str(value), config.platform.name)
        return replace(config, algorithm=replace(row, provenance=""))
    return KNOBS[knob](config, float(value))


def sweep(
    config: UavConfiguration,
    knob: str,
    values: Iterable["float | str"],
    store: Optional[PresetStore] = None,
) -> list[SweepPoint]:
    """Analyze the configuration at each knob value, in order.

    Infeasible points stay in the result with their error message rather
    than aborting the sweep.
    """
    points = []
    for value in values:
        try:
            modified = apply_knob(config, knob, value, store)
            points.append(SweepPoint(knob, value, analyze(modified)))
        except (CannotClimbError, ValueError, KeyError) as exc:
            points.append(SweepPoint(knob, value, None, error=str(exc) or repr(exc)))
    return points


def default_f_range(analyses: Sequence[F1Analysis]) -> tuple[float, float]:
    """A shared plotting range: decade-aligned, past every knee and rate."""
    top = max(max(a.knee.knee_throughput, a.f_action_hz) for a in analyses)
    f_max = 10.0 ** math.ceil(math.log10(10.0 * top))
    return 0.1, f_max


def compare(
    configs: Sequence[UavConfiguration],
    f_range_hz: Optional[tuple[float, float]] = None,
    samples: int = 200,
    scale: str = "log",
) -> Comparison:
    """Overlay analyses of several configurations on one sampling grid."""
    if not configs:
        raise ValueError("compare needs at least one configuration")
    analyses = tuple(analyze(c) for c in configs)
    if f_range_hz is None:
        f_range_hz = default_f_range(analyses)
    series = tuple(roofline_series(c, f_range_hz, samples, scale) for c in configs)
    return Comparison(series=series, analyses=analyses)
