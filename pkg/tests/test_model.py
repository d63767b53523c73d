"""Closed-form model tests.

Derived expectations were frozen from independent oracles: scipy.optimize
root-finding for the inversions and central finite differences for the
derivative checks (see test comments at each frozen constant).
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skyline import (
    ActionTiming,
    BodyDynamics,
    DegenerateRooflineError,
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

REL = 1e-9


# ---------------------------------------------------------------- types

def test_pipeline_timing_rejects_nonpositive_periods():
    with pytest.raises(ValueError):
        PipelineTiming(0.0, 0.1, 0.1)
    with pytest.raises(ValueError):
        PipelineTiming(0.1, -0.1, 0.1)
    with pytest.raises(ValueError):
        PipelineTiming(0.1, 0.1, math.inf)


def test_pipeline_timing_rate_roundtrip():
    timing = PipelineTiming.from_rates(60.0, 178.0, 1000.0)
    assert timing.sensor_rate == pytest.approx(60.0, rel=1e-12)
    assert timing.compute_rate == pytest.approx(178.0, rel=1e-12)
    assert timing.control_rate == pytest.approx(1000.0, rel=1e-12)


def test_body_dynamics_invariants():
    with pytest.raises(ValueError):
        BodyDynamics(0.0, 1.0)
    with pytest.raises(ValueError):
        BodyDynamics(1.0, -1.0)
    BodyDynamics(1.0, 0.0)  # zero range is allowed, degenerate


def test_action_timing_consistency():
    ActionTiming.from_period(0.25)
    ActionTiming.from_throughput(4.0)
    with pytest.raises(ValueError):
        ActionTiming(0.25, 4.1)


# ------------------------------------------------------------ pipeline ops

def test_action_period_bounds_mixed_rates():
    timing = PipelineTiming(1 / 60, 1 / 178, 1 / 1000)
    lower, upper = action_period_bounds(timing)
    assert lower == pytest.approx(0.016666666666666666, rel=1e-12)
    assert upper == pytest.approx(0.023284644194756555, rel=1e-12)


def test_action_period_bounds_equal_stages():
    t = 0.037
    assert action_period_bounds(PipelineTiming(t, t, t)) == (t, pytest.approx(3 * t, rel=1e-12))


def test_action_period_bounds_slow_pipeline():
    lower, upper = action_period_bounds(PipelineTiming(0.909, 1 / 30, 0.001))
    assert lower == pytest.approx(0.909, rel=1e-12)
    assert upper == pytest.approx(0.9433333333333334, rel=1e-12)


def test_action_throughput_is_min_rate():
    assert action_throughput(PipelineTiming.from_rates(60, 178, 1000)) == pytest.approx(60.0, rel=1e-12)
    assert action_throughput(PipelineTiming.from_rates(60, 1.1, 1000)) == pytest.approx(1.1, rel=1e-12)
    f = 77.7
    assert action_throughput(PipelineTiming.from_rates(f, f, f)) == pytest.approx(f, rel=1e-12)


# ------------------------------------------------------------ velocity curve

def test_safe_velocity_reference_points():
    dyn = BodyDynamics(50.0, 10.0)
    assert safe_velocity(dyn, 0.0) == pytest.approx(31.622776601683793, rel=1e-12)
    assert safe_velocity(dyn, 1.0) == pytest.approx(9.16079783099616, rel=1e-12)


def test_safe_velocity_zero_range():
    assert safe_velocity(BodyDynamics(7.0, 0.0), 0.5) == 0.0
    assert safe_velocity(BodyDynamics(7.0, 0.0), 0.0) == 0.0


def test_safe_velocity_rejects_negative_period():
    with pytest.raises(ValueError):
        safe_velocity(BodyDynamics(1.0, 1.0), -0.1)


def test_asymptote_reference_points():
    assert asymptote_velocity(BodyDynamics(50.0, 10.0)) == pytest.approx(31.622776601683793, rel=1e-12)
    assert asymptote_velocity(BodyDynamics(3.0, 0.0)) == 0.0
    # back-solved flight-test acceleration, 3 m range
    assert asymptote_velocity(BodyDynamics(0.814, 3.0)) == pytest.approx(2.210, abs=5e-4)


def test_inversion_reference_point():
    # frozen from a brentq root-find on the curve: T(v=0.985*asymptote)
    dyn = BodyDynamics(50.0, 10.0)
    T = action_period_for_velocity(dyn, 31.148434952658537)
    assert T == pytest.approx(0.009559067749392247, rel=1e-9)
    assert 1.0 / T == pytest.approx(104.6127, rel=1e-6)


def test_inversions_agree_with_root_finding_oracle():
    from oracles import brentq_calibrate_a_max, brentq_period_for_velocity

    dyn = BodyDynamics(50.0, 10.0)
    for v in (5.0, 15.0, 31.148434952658537):
        assert action_period_for_velocity(dyn, v) == pytest.approx(
            brentq_period_for_velocity(50.0, 10.0, v), rel=1e-9
        )
    for v, T, d in ((2.13, 0.1, 3.0), (1.51, 0.1, 3.0), (1.58, 0.1, 3.0)):
        assert calibrate_a_max(v, T, d) == pytest.approx(brentq_calibrate_a_max(v, T, d), rel=1e-9)


def test_inversion_calibrated_flight_point():
    # calibrate the acceleration from the published 2.13 m/s at 10 Hz and
    # 3 m, then invert back: the 10 Hz period must reappear
    a = calibrate_a_max(2.13, 0.1, 3.0)
    assert action_period_for_velocity(BodyDynamics(a, 3.0), 2.13) == pytest.approx(0.1, rel=1e-9)


def test_inversion_domain_errors():
    dyn = BodyDynamics(50.0, 10.0)
    ceiling = asymptote_velocity(dyn)
    with pytest.raises(UnattainableVelocityError):
        action_period_for_velocity(dyn, ceiling)
    with pytest.raises(UnattainableVelocityError):
        action_period_for_velocity(dyn, ceiling * 1.01)
    with pytest.raises(UnattainableVelocityError):
        action_period_for_velocity(dyn, 0.0)


def test_knee_point_reference():
    knee = knee_point(BodyDynamics(50.0, 10.0), 0.985)
    assert 90.0 <= knee.knee_throughput <= 120.0
    assert knee.knee_throughput == pytest.approx(104.61271184771952, rel=1e-9)
    assert knee.knee_velocity == pytest.approx(0.985 * knee.asymptote_velocity, rel=1e-12)


def test_knee_point_half_threshold():
    knee = knee_point(BodyDynamics(2.0, 5.0), 0.5)
    assert knee.knee_velocity == pytest.approx(0.5 * asymptote_velocity(BodyDynamics(2.0, 5.0)), rel=1e-12)


def test_knee_point_threshold_towards_one_diverges():
    dyn = BodyDynamics(50.0, 10.0)
    assert knee_point(dyn, 1 - 1e-9).knee_throughput > 1e6 * knee_point(dyn, 0.985).knee_throughput / 1e3


def test_knee_point_degenerate_range():
    with pytest.raises(DegenerateRooflineError):
        knee_point(BodyDynamics(1.0, 0.0), 0.985)
    with pytest.raises(ValueError):
        knee_point(BodyDynamics(1.0, 1.0), 1.0)


def test_calibrate_reference_points():
    # frozen from a brentq root-find on a (closed form agreed to 1e-15)
    assert calibrate_a_max(2.13, 0.1, 3.0) == pytest.approx(0.813939720, rel=1e-8)
    assert calibrate_a_max(1.58, 0.1, 3.0) == pytest.approx(0.439197748, rel=1e-8)


def test_calibrate_rejects_obstacle_overrun():
    with pytest.raises(UnattainableVelocityError):
        calibrate_a_max(2.0, 2.0, 3.0)  # v*T = 4 m > 3 m
    with pytest.raises(ValueError):
        calibrate_a_max(-1.0, 0.1, 3.0)


# ------------------------------------------------------------ properties

def dynamics_and_period():
    """(a, d, T) with T drawn relative to the characteristic stop time."""
    return st.tuples(
        st.floats(0.05, 200.0),
        st.floats(0.05, 200.0),
        st.floats(1e-5, 100.0),
    ).map(lambda t: (t[0], t[1], t[2] * math.sqrt(2.0 * t[1] / t[0])))


@settings(max_examples=200, deadline=None)
@given(dynamics_and_period(), st.floats(1.001, 10.0))
def test_velocity_strictly_decreasing_in_period(adt, factor):
    a, d, T = adt
    dyn = BodyDynamics(a, d)
    assert safe_velocity(dyn, T * factor) < safe_velocity(dyn, T)


@settings(max_examples=200, deadline=None)
@given(dynamics_and_period(), st.floats(1.001, 10.0))
def test_velocity_strictly_increasing_in_acceleration(adt, factor):
    a, d, T = adt
    assert safe_velocity(BodyDynamics(a * factor, d), T) > safe_velocity(BodyDynamics(a, d), T)


@settings(max_examples=200, deadline=None)
@given(dynamics_and_period(), st.floats(1.001, 10.0))
def test_velocity_strictly_increasing_in_range(adt, factor):
    a, d, T = adt
    assert safe_velocity(BodyDynamics(a, d * factor), T) > safe_velocity(BodyDynamics(a, d), T)


@settings(max_examples=200, deadline=None)
@given(dynamics_and_period())
def test_velocity_bounded_by_asymptote(adt):
    a, d, T = adt
    dyn = BodyDynamics(a, d)
    v = safe_velocity(dyn, T)
    assert 0.0 <= v <= asymptote_velocity(dyn)


@settings(max_examples=200, deadline=None)
@given(dynamics_and_period())
def test_analytic_slope_matches_finite_differences(adt):
    a, d, T = adt
    dyn = BodyDynamics(a, d)
    h = 1e-6 * math.sqrt(T * T + 2.0 * d / a)
    h = min(h, T / 2) if T > 0 else h
    numeric = (safe_velocity(dyn, T + h) - safe_velocity(dyn, T - h)) / (2.0 * h)
    analytic = safe_velocity_slope(dyn, T)
    assert analytic < 0.0
    assert numeric == pytest.approx(analytic, rel=1e-6)


@settings(max_examples=200, deadline=None)
@given(dynamics_and_period())
def test_period_inversion_roundtrip(adt):
    a, d, T = adt
    dyn = BodyDynamics(a, d)
    v = safe_velocity(dyn, T)
    assert action_period_for_velocity(dyn, v) == pytest.approx(T, rel=REL)


@settings(max_examples=200, deadline=None)
@given(dynamics_and_period())
def test_calibration_roundtrip(adt):
    a, d, T = adt
    v = safe_velocity(BodyDynamics(a, d), T)
    assert calibrate_a_max(v, T, d) == pytest.approx(a, rel=REL)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.01, 1e5), st.floats(0.01, 1e5), st.floats(0.01, 1e5))
def test_bottleneck_identity(f1, f2, f3):
    timing = PipelineTiming.from_rates(f1, f2, f3)
    f_action = action_throughput(timing)
    assert f_action == min(timing.sensor_rate, timing.compute_rate, timing.control_rate)
    assert f_action <= timing.sensor_rate
    assert f_action <= timing.compute_rate
    assert f_action <= timing.control_rate
    lower, upper = action_period_bounds(timing)
    assert f_action == 1.0 / lower
    assert lower < upper
