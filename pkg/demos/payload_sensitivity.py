"""Velocity vs payload mass is sharply non-linear near the climb limit.

The four flight-test builds share a frame and motors and differ only in
payload. The first 50 g added past the lightest build costs ~25% of the
velocity; the next 50 g costs ~47% of what's left; 800 g cannot fly at
all. Margins shrink fast when thrust headroom is thin.
"""

from skyline import AccelerationModel, AirframeSpec, payload_velocity_curve

frame = AirframeSpec(base_mass_g=1030.0, rotor_count=4, per_rotor_pull_gf=435.0, control_rate_hz=1000.0)

print("payload (g)   safe velocity at 10 Hz, 3 m sensing")
masses = [590.0, 640.0, 690.0, 740.0, 770.0, 800.0]
points = payload_velocity_curve(frame, [], masses, sense_range_m=3.0,
                                action_period_s=0.1, model=AccelerationModel())
for point in points:
    if point.feasible:
        print(f"  {point.payload_mass_g:6.0f}     {point.velocity_mps:6.3f} m/s")
    else:
        print(f"  {point.payload_mass_g:6.0f}     cannot climb")

velocities = [p.velocity_mps for p in points if p.feasible]
print(f"\nfirst 50 g: {1 - velocities[1] / velocities[0]:+.0%} velocity")
print(f"next 50 g:  {1 - velocities[2] / velocities[1]:+.0%} of what remained")
