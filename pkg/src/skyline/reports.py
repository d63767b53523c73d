"""Plain-dict report shapes shared by the CLI and the HTTP service.

Floats are rounded to 12 significant digits before encoding so identical
inputs produce byte-identical JSON on any platform.
"""

from __future__ import annotations

import json
from typing import Any

from .analysis import Comparison, F1Analysis, RooflineSeries, SweepPoint
from .catalog import UavConfiguration, serialize_config

SIGNIFICANT_DIGITS = 12


def round_floats(obj: Any) -> Any:
    if isinstance(obj, float):
        return float(f"{obj:.{SIGNIFICANT_DIGITS}g}")
    if isinstance(obj, dict):
        return {k: round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v) for v in obj]
    return obj


def dumps(obj: Any, indent: "int | None" = None) -> str:
    """Deterministic JSON with floats trimmed to 12 significant digits."""
    return json.dumps(round_floats(obj), sort_keys=True, indent=indent) + "\n"


def dumps_exact(obj: Any, indent: "int | None" = None) -> str:
    """Deterministic JSON at full float precision (round-trippable configs)."""
    return json.dumps(obj, sort_keys=True, indent=indent) + "\n"


def analysis_report(analysis: F1Analysis, config: "UavConfiguration | None" = None) -> dict:
    report = {
        "config_name": analysis.config_name,
        "f_action_hz": analysis.f_action_hz,
        "v_safe_mps": analysis.v_safe_mps,
        "knee": {
            "throughput_hz": analysis.knee.knee_throughput,
            "velocity_mps": analysis.knee.knee_velocity,
            "asymptote_velocity_mps": analysis.knee.asymptote_velocity,
            "threshold": analysis.knee.threshold,
        },
        "bound": {
            "kind": analysis.bound.kind.value,
            "ceiling_velocity_mps": analysis.bound.ceiling_velocity,
            "limiting_rate_hz": analysis.bound.limiting_rate,
        },
        "gap": {
            "ratio": analysis.gap_ratio,
            "direction": analysis.gap_direction.value,
        },
        "rates": {
            "sensor_hz": analysis.sensor_rate_hz,
            "compute_hz": analysis.compute_rate_hz,
            "control_hz": analysis.control_rate_hz,
        },
        "physics": {
            "a_max_mps2": analysis.a_max_mps2,
            "sense_range_m": analysis.sense_range_m,
            "total_mass_kg": analysis.total_mass_kg,
            "thrust_to_weight": analysis.thrust_to_weight,
        },
        "recommendations": list(analysis.recommendations),
    }
    if config is not None:
        report["config"] = serialize_config(config)
    return report


def series_report(series: RooflineSeries) -> dict:
    return {
        "label": series.label,
        "scale": series.scale,
        "frequencies_hz": list(series.frequencies_hz),
        "velocities_mps": list(series.velocities_mps),
        "roof_velocity_mps": series.roof_velocity_mps,
        "knee": {
            "throughput_hz": series.knee.knee_throughput,
            "velocity_mps": series.knee.knee_velocity,
            "asymptote_velocity_mps": series.knee.asymptote_velocity,
            "threshold": series.knee.threshold,
        },
        "ceilings": [
            {
                "label": c.label,
                "rate_hz": c.rate_hz,
                "ceiling_velocity_mps": c.ceiling_velocity_mps,
            }
            for c in series.ceilings
        ],
    }


def sweep_report(points: "list[SweepPoint]") -> list:
    rows = []
    for point in points:
        row: dict[str, Any] = {"knob": point.knob, "value": point.value}
        if point.analysis is not None:
            row["analysis"] = analysis_report(point.analysis)
        else:
            row["error"] = point.error
        rows.append(row)
    return rows


def comparison_report(comparison: Comparison) -> dict:
    return {
        "series": [series_report(s) for s in comparison.series],
        "analyses": [analysis_report(a) for a in comparison.analyses],
    }
