"""Walk the basic safe-velocity roofline: curve, asymptote, knee.

A vehicle that accelerates at 50 m/s^2 and senses 10 m ahead can never
exceed sqrt(2 * 10 * 50) ~ 31.6 m/s no matter how fast it thinks. This
script sweeps the decision rate across five decades and shows where extra
throughput stops buying velocity.
"""

from pathlib import Path

from skyline import BodyDynamics, asymptote_velocity, knee_point, load_config, roofline_series, safe_velocity
from skyline.svg import render_roofline_svg

OUT = Path(__file__).parent / "out"

dyn = BodyDynamics(a_max=50.0, sense_range=10.0)
print(f"asymptotic velocity: {asymptote_velocity(dyn):.3f} m/s")
for period in (5.0, 1.0, 0.1, 0.01, 0.001):
    print(f"  decision every {period:g} s  ->  {safe_velocity(dyn, period):7.3f} m/s")

knee = knee_point(dyn, threshold=0.985)
print(f"knee: {knee.knee_throughput:.1f} Hz reaches {knee.knee_velocity:.2f} m/s "
      f"({knee.threshold:.1%} of the roof)")
print("anything faster than the knee is spent on physics that cannot follow")

config = load_config({
    "name": "50 m/s^2, 10 m sensing",
    "uav": {"base_mass_g": 1000, "rotor_count": 4, "rotor_pull_gf": 400, "control_rate_hz": 1000},
    "sensor": {"framerate_hz": 60, "range_m": 10.0},
    "algorithm": {"throughput_hz": 178.0},
    "model": {"a_max_mps2": 50.0},
})
series = roofline_series(config, (0.2, 10000.0), samples=200)
OUT.mkdir(exist_ok=True)
(OUT / "roofline_basics.svg").write_text(render_roofline_svg([series]), encoding="utf-8")
print(f"wrote {OUT / 'roofline_basics.svg'}")
