"""Pick an onboard computer by flight performance, not benchmark numbers.

On the DJI Spark preset the AGX runs the navigation network 1.5x faster
than the NCS stick, yet the NCS build flies faster: the AGX's board and
heatsink mass cost more acceleration than its throughput is worth. A
hypothetical 15 W AGX claws most of that back by halving the heatsink.
"""

from pathlib import Path

from skyline import analyze, compare, load_config
from skyline.svg import render_roofline_svg

OUT = Path(__file__).parent / "out"


def spark_with(platform: str):
    return load_config({
        "name": f"Spark + {platform}",
        "uav": "DJI Spark",
        "compute": platform,
        "algorithm": "DroNet",
    })


configs = [spark_with(p) for p in ("Intel NCS", "Nvidia AGX", "Nvidia AGX-15W")]
for config in configs:
    a = analyze(config)
    print(f"{config.name:22s} compute {a.compute_rate_hz:5.0f} Hz | "
          f"v_safe {a.v_safe_mps:5.2f} m/s | {a.bound.kind.value}")
    for tip in a.recommendations:
        print(f"{'':22s} tip: {tip}")

ncs, agx30, agx15 = (analyze(c) for c in configs)
print(f"\nNCS outruns AGX-30W by {ncs.v_safe_mps / agx30.v_safe_mps:.2f}x despite slower compute")
print(f"dropping the AGX to 15 W raises its velocity {agx15.v_safe_mps / agx30.v_safe_mps - 1:+.0%}")

result = compare(configs, samples=200)
OUT.mkdir(exist_ok=True)
(OUT / "compute_selection.svg").write_text(
    render_roofline_svg(result.series, title="DJI Spark: onboard compute choices"), encoding="utf-8"
)
print(f"wrote {OUT / 'compute_selection.svg'}")
