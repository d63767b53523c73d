"""Cost of dual-redundant compute: a second TX2 drags the roofline down.

Duplicating the onboard computer buys fault tolerance but adds a board
and a heatsink to the payload. On the Pelican preset that extra 166 g
cuts the safe velocity by about a third.
"""

from pathlib import Path

from skyline import compare, load_config
from skyline.svg import render_roofline_svg

OUT = Path(__file__).parent / "out"

single = load_config({
    "name": "Roofline-TX2",
    "uav": "AscTec Pelican",
    "compute": "Nvidia TX2",
    "algorithm": "DroNet",
})
dual = load_config({
    "name": "Roofline-2x TX2",
    "uav": "AscTec Pelican",
    "compute": "Nvidia TX2",
    "algorithm": "DroNet",
    "payload": [{"name": "redundant TX2 + heatsink", "mass_g": 166.0, "kind": "compute"}],
})

result = compare([single, dual], samples=200)
one, two = result.analyses
print(f"single TX2: {one.v_safe_mps:.2f} m/s at {one.f_action_hz:.0f} Hz ({one.bound.kind.value})")
print(f"dual TX2:   {two.v_safe_mps:.2f} m/s at {two.f_action_hz:.0f} Hz ({two.bound.kind.value})")
print(f"redundancy costs {1 - two.v_safe_mps / one.v_safe_mps:.0%} of the safe velocity")

OUT.mkdir(exist_ok=True)
(OUT / "redundancy_tradeoff.svg").write_text(
    render_roofline_svg(result.series, title="Pelican: single vs dual TX2"), encoding="utf-8"
)
print(f"wrote {OUT / 'redundancy_tradeoff.svg'}")
