"""Batch command-line interface.

Exit codes: 0 success, 2 configuration/validation problem, 3 the airframe
cannot climb, 4 unwritable output path. Data goes to stdout, diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys

import yaml

from . import __version__
from .analysis import analyze, compare, sweep
from .catalog import (
    ConfigError,
    PresetStore,
    builtin_presets,
    load_config,
    merge_preset_document,
    store_document,
)
from .physics import CannotClimbError
from .reports import analysis_report, dumps_exact as dumps, sweep_report
from .svg import render_roofline_svg

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CANNOT_CLIMB = 3
EXIT_OUTPUT = 4


def _load_store() -> PresetStore:
    store = builtin_presets()
    path = os.environ.get("SKYLINE_PRESET_PATH")
    if path:
        with open(path, encoding="utf-8") as fh:
            store = merge_preset_document(store, yaml.safe_load(fh))
    return store


def _read_config(path: str, store: PresetStore):
    with open(path, encoding="utf-8") as fh:
        return load_config(fh.read(), store)


def _text_report(report: dict) -> str:
    lines = [
        f"configuration:    {report['config_name']}",
        f"action rate:      {report['f_action_hz']:.3f} Hz "
        f"(sensor {report['rates']['sensor_hz']:.3f} / compute {report['rates']['compute_hz']:.3f} "
        f"/ control {report['rates']['control_hz']:.3f})",
        f"safe velocity:    {report['v_safe_mps']:.3f} m/s "
        f"(asymptote {report['knee']['asymptote_velocity_mps']:.3f} m/s)",
        f"knee:             {report['knee']['throughput_hz']:.3f} Hz "
        f"at {report['knee']['velocity_mps']:.3f} m/s",
        f"bound:            {report['bound']['kind']}",
        f"gap:              {report['gap']['ratio']:.2f}x ({report['gap']['direction']})",
        f"a_max:            {report['physics']['a_max_mps2']:.4f} m/s^2, "
        f"mass {report['physics']['total_mass_kg']:.3f} kg, "
        f"thrust/weight {report['physics']['thrust_to_weight']:.3f}",
    ]
    for tip in report["recommendations"]:
        lines.append(f"tip:              {tip}")
    return "\n".join(lines) + "\n"


def _analysis_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["config_name", "f_action_hz", "v_safe_mps", "knee_hz", "knee_velocity_mps", "bound", "gap", "direction"]
    )
    writer.writerow(
        [
            report["config_name"],
            f"{report['f_action_hz']:.6g}",
            f"{report['v_safe_mps']:.6g}",
            f"{report['knee']['throughput_hz']:.6g}",
            f"{report['knee']['velocity_mps']:.6g}",
            report["bound"]["kind"],
            f"{report['gap']['ratio']:.6g}",
            report["gap"]["direction"],
        ]
    )
    return buf.getvalue()


def cmd_analyze(args) -> int:
    store = _load_store()
    config = _read_config(args.config, store)
    report = analysis_report(analyze(config), config)
    if args.format == "json":
        sys.stdout.write(dumps(report, indent=2))
    elif args.format == "csv":
        sys.stdout.write(_analysis_csv(report))
    else:
        sys.stdout.write(_text_report(report))
    return EXIT_OK


def _sweep_values(args) -> list:
    if args.values is not None:
        out = []
        for chunk in args.values.split(","):
            chunk = chunk.strip()
            try:
                out.append(float(chunk))
            except ValueError:
                out.append(chunk)  # algorithm names
        return out
    if args.steps is None or args.start is None or args.stop is None:
        raise ConfigError("values", "give either --values or --from/--to/--steps")
    if args.steps < 1:
        raise ConfigError("steps", f"must be >= 1, got {args.steps}")
    if args.steps == 1:
        return [args.start]
    step = (args.stop - args.start) / (args.steps - 1)
    return [args.start + i * step for i in range(args.steps)]


def cmd_sweep(args) -> int:
    store = _load_store()
    config = _read_config(args.config, store)
    points = sweep(config, args.knob, _sweep_values(args), store)
    if args.format == "json":
        sys.stdout.write(dumps(sweep_report(points), indent=2))
        return EXIT_OK
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["knob_value", "f_action_hz", "v_safe_mps", "bound", "gap"])
    for point in points:
        if point.analysis is None:
            writer.writerow([point.value, "", "", f"error: {point.error}", ""])
        else:
            a = point.analysis
            writer.writerow(
                [
                    point.value,
                    f"{a.f_action_hz:.6g}",
                    f"{a.v_safe_mps:.6g}",
                    a.bound.kind.value,
                    f"{a.gap_ratio:.6g}",
                ]
            )
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_plot(args) -> int:
    store = _load_store()
    configs = [_read_config(path, store) for path in args.configs]
    f_range = None
    if args.fmin is not None and args.fmax is not None:
        f_range = (args.fmin, args.fmax)
    scale = "log" if args.logx else "linear"
    result = compare(configs, f_range_hz=f_range, samples=args.samples, scale=scale)
    document = render_roofline_svg(result.series)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(document)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_OUTPUT
    return EXIT_OK


def cmd_presets(args) -> int:
    store = _load_store()
    doc = store_document(store)
    if args.show is None:
        for section in ("uavs", "platforms", "sensors"):
            for entry in doc[section]:
                print(f"{section[:-1]}: {entry['name']}")
        for entry in doc["algorithms"]:
            print(f"algorithm: {entry['algorithm']} @ {entry['platform']} = {entry['throughput_hz']:g} Hz")
        return EXIT_OK
    name = args.show
    for section in ("uavs", "platforms", "sensors"):
        for entry in doc[section]:
            if entry["name"] == name:
                sys.stdout.write(dumps({section[:-1]: entry}, indent=2))
                return EXIT_OK
    rows = [e for e in doc["algorithms"] if e["algorithm"] == name]
    if rows:
        sys.stdout.write(dumps({"algorithm": rows}, indent=2))
        return EXIT_OK
    print(f"unknown preset {name!r}", file=sys.stderr)
    return EXIT_CONFIG


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skyline",
        description="Safe-velocity roofline analysis for UAV onboard compute.",
    )
    parser.add_argument("--version", action="version", version=f"skyline {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one configuration")
    p.add_argument("config", help="configuration document (YAML or JSON)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="analyze across one knob")
    p.add_argument("config")
    p.add_argument("--knob", required=True)
    p.add_argument("--values", help="comma-separated values")
    p.add_argument("--from", dest="start", type=float)
    p.add_argument("--to", dest="stop", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("plot", help="render roofline SVG for one or more configurations")
    p.add_argument("configs", nargs="+")
    p.add_argument("--out", required=True)
    p.add_argument("--fmin", type=float)
    p.add_argument("--fmax", type=float)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--logx", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("presets", help="list or show catalog entries")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--list", action="store_true", default=True)
    group.add_argument("--show", metavar="NAME")
    p.set_defaults(func=cmd_presets)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CannotClimbError as exc:
        print(
            f"physics error: {exc} (thrust_to_weight={exc.thrust_to_weight:.3f})",
            file=sys.stderr,
        )
        return EXIT_CANNOT_CLIMB
    except FileNotFoundError as exc:
        print(f"cannot read {exc.filename}: {exc.strerror}", file=sys.stderr)
        return EXIT_CONFIG
    except yaml.YAMLError as exc:
        print(f"configuration error: document does not parse: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
