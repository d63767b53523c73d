"""Safe-velocity roofline analysis for autonomous-UAV onboard compute."""

__version__ = "1.0.0"

from .analysis import (
    BALANCED_BAND,
    BoundClass,
    BoundKind,
    CeilingMarker,
    Comparison,
    F1Analysis,
    GapDirection,
    RooflineSeries,
    SweepPoint,
    analyze,
    apply_knob,
    classify_bound,
    compare,
    optimization_gap,
    recommendations,
    roofline_series,
    sweep,
)
from .catalog import (
    AlgorithmPerf,
    ComputePlatform,
    ConfigError,
    PresetStore,
    SensorSpec,
    UavConfiguration,
    UavPreset,
    backsolve_preset_dynamics,
    builtin_presets,
    knee_calibrated_a_max,
    load_config,
    merge_preset_document,
    resolve_config,
    serialize_config,
)
from .model import (
    DEFAULT_KNEE_THRESHOLD,
    ActionTiming,
    BodyDynamics,
    DegenerateRooflineError,
    KneePoint,
    PipelineTiming,
    UnattainableVelocityError,
    action_period_bounds,
    action_period_for_velocity,
    action_throughput,
    asymptote_velocity,
    calibrate_a_max,
    knee_point,
    safe_velocity,
    safe_velocity_slope,
)
from .physics import (
    GRAM_FORCE_N,
    GRAVITY,
    HEATSINK_GRAMS_PER_WATT,
    AccelerationModel,
    AccelerationStrategy,
    AirframeSpec,
    CannotClimbError,
    MassBudget,
    PayloadItem,
    PayloadKind,
    PayloadSweepPoint,
    estimate_a_max,
    heatsink_mass,
    mass_budget,
    payload_velocity_curve,
)
from .svg import render_roofline_svg

__all__ = [name for name in dir() if not name.startswith("_")]
