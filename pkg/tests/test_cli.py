"""Command-line interface tests: formats, exit codes, deterministic output."""

import json
import os
from pathlib import Path

import pytest
import yaml

from skyline import load_config
from skyline.cli import main

from conftest import pelican_doc, spark_doc, synthetic_doc

GOLDEN_DIR = Path(__file__).parent / "golden"


def write_doc(tmp_path, doc, name="config.yaml"):
    path = tmp_path / name
    path.write_text(yaml.safe_dump(doc), encoding="utf-8")
    return str(path)


# ------------------------------------------------------------ analyze

def test_analyze_text_report(tmp_path, capsys):
    path = write_doc(tmp_path, pelican_doc("SPA-package-delivery"))
    assert main(["analyze", path]) == 0
    out = capsys.readouterr().out
    assert "ComputeBound" in out
    assert "39.09" in out


def test_analyze_json_roundtrips_config(tmp_path, capsys, store):
    doc = pelican_doc()
    path = write_doc(tmp_path, doc)
    assert main(["analyze", path, "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["bound"]["kind"] == "PhysicsBound"
    assert report["gap"]["ratio"] == pytest.approx(178.0 / 43.0, rel=1e-9)
    # the embedded config reloads to the identical resolved configuration
    assert load_config(report["config"], store) == load_config(doc, store)


def test_analyze_csv_has_header(tmp_path, capsys):
    path = write_doc(tmp_path, pelican_doc())
    assert main(["analyze", path, "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("config_name,f_action_hz,v_safe_mps")
    assert len(lines) == 2
    assert "." in lines[1] and "," in lines[1]


def test_analyze_malformed_config_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.yaml"
    path.write_text("uav: [unclosed", encoding="utf-8")
    assert main(["analyze", str(path)]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "configuration error" in captured.err


def test_analyze_missing_field_exits_2(tmp_path, capsys):
    doc = synthetic_doc()
    del doc["uav"]["rotor_pull_gf"]
    del doc["model"]  # no declared acceleration either
    path = write_doc(tmp_path, doc)
    assert main(["analyze", path]) == 2
    assert "rotor_pull" in capsys.readouterr().err


def test_analyze_cannot_climb_exits_3(tmp_path, capsys):
    path = write_doc(tmp_path, {"uav": {"name": "UAV-B"},
                                "model": {"acceleration_strategy": "vertical_headroom"}})
    assert main(["analyze", path]) == 3
    err = capsys.readouterr().err
    assert "thrust_to_weight=0.951" in err


def test_analyze_missing_file_exits_2(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "nope.yaml")]) == 2
    assert "cannot read" in capsys.readouterr().err


# ------------------------------------------------------------ sweep

def test_sweep_tdp_csv(tmp_path, capsys):
    path = write_doc(tmp_path, spark_doc("Nvidia AGX"))
    assert main(["sweep", path, "--knob", "compute_tdp_w", "--values", "30,15"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "knob_value,f_action_hz,v_safe_mps,bound,gap"
    assert len(lines) == 3
    v30 = float(lines[1].split(",")[2])
    v15 = float(lines[2].split(",")[2])
    assert v15 > v30


def test_sweep_payload_rows(tmp_path, capsys):
    path = write_doc(tmp_path, {"uav": {"name": "UAV-A"}})
    assert main(["sweep", path, "--knob", "payload_weight_g",
                 "--values", "590,640,690,800"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 5
    velocities = [float(row.split(",")[2]) for row in lines[1:4]]
    assert velocities == sorted(velocities, reverse=True)
    assert "error" in lines[4]


def test_sweep_range_flags(tmp_path, capsys):
    path = write_doc(tmp_path, pelican_doc())
    assert main(["sweep", path, "--knob", "sensor_framerate_hz",
                 "--from", "10", "--to", "50", "--steps", "5"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 6
    assert [float(r.split(",")[0]) for r in lines[1:]] == [10.0, 20.0, 30.0, 40.0, 50.0]


def test_sweep_single_step(tmp_path, capsys):
    path = write_doc(tmp_path, pelican_doc())
    assert main(["sweep", path, "--knob", "sensor_framerate_hz",
                 "--from", "30", "--to", "60", "--steps", "1"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 2


def test_sweep_json_format(tmp_path, capsys):
    path = write_doc(tmp_path, pelican_doc())
    assert main(["sweep", path, "--knob", "compute_runtime_s",
                 "--values", "0.01,0.5", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[0]["analysis"]["rates"]["compute_hz"] == pytest.approx(100.0, rel=1e-9)


# ------------------------------------------------------------ plot

def test_plot_writes_svg(tmp_path, capsys):
    path = write_doc(tmp_path, synthetic_doc())
    out = tmp_path / "roofline.svg"
    assert main(["plot", path, "--out", str(out), "--fmin", "0.2", "--fmax", "10000"]) == 0
    document = out.read_text(encoding="utf-8")
    assert document.startswith("<svg")
    assert document.rstrip().endswith("</svg>")
    assert 'width="800" height="500"' in document


def test_plot_is_byte_deterministic(tmp_path):
    path = write_doc(tmp_path, pelican_doc())
    out1, out2 = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["plot", path, "--out", str(out1), "--fmin", "0.5", "--fmax", "2000"]) == 0
    assert main(["plot", path, "--out", str(out2), "--fmin", "0.5", "--fmax", "2000"]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_plot_matches_golden(tmp_path):
    path = write_doc(tmp_path, synthetic_doc())
    out = tmp_path / "golden_check.svg"
    assert main(["plot", path, "--out", str(out),
                 "--fmin", "0.2", "--fmax", "10000", "--samples", "120"]) == 0
    golden = GOLDEN_DIR / "synthetic_roofline.svg"
    assert out.read_bytes() == golden.read_bytes()


def test_plot_overlay_two_configs(tmp_path):
    p1 = write_doc(tmp_path, spark_doc("Intel NCS"), "ncs.yaml")
    p2 = write_doc(tmp_path, spark_doc("Nvidia AGX"), "agx.yaml")
    out = tmp_path / "overlay.svg"
    assert main(["plot", p1, p2, "--out", str(out)]) == 0
    assert out.read_text(encoding="utf-8").count("<polyline") == 2


def test_plot_unwritable_path_exits_4(tmp_path, capsys):
    path = write_doc(tmp_path, pelican_doc())
    assert main(["plot", path, "--out", str(tmp_path / "no-such-dir" / "x.svg")]) == 4
    assert "cannot write" in capsys.readouterr().err


# ------------------------------------------------------------ presets

def test_presets_list(capsys):
    assert main(["presets", "--list"]) == 0
    out = capsys.readouterr().out
    assert "UAV-A" in out
    assert "DroNet @ Nvidia TX2 = 178 Hz" in out


def test_presets_show_platform(capsys):
    assert main(["presets", "--show", "Nvidia AGX"]) == 0
    entry = json.loads(capsys.readouterr().out)["platform"]
    assert entry["tdp_w"] == 30.0
    assert entry["board_mass_g"] == 280.0
    assert entry["provenance"]


def test_presets_show_unknown_exits_2(capsys):
    assert main(["presets", "--show", "bogus"]) == 2
    assert "unknown preset" in capsys.readouterr().err


def test_preset_path_merges_user_presets(tmp_path, capsys, monkeypatch):
    extra = {
        "platforms": [{"name": "HomebrewAccel", "tdp_w": 3.0, "board_mass_g": 25.0}],
        "algorithms": [{"algorithm": "DroNet", "platform": "HomebrewAccel", "throughput_hz": 77.0}],
    }
    preset_path = tmp_path / "extra.yaml"
    preset_path.write_text(yaml.safe_dump(extra), encoding="utf-8")
    monkeypatch.setenv("SKYLINE_PRESET_PATH", str(preset_path))

    assert main(["presets", "--show", "HomebrewAccel"]) == 0
    assert json.loads(capsys.readouterr().out)["platform"]["tdp_w"] == 3.0

    config = write_doc(tmp_path, {"uav": "AscTec Pelican", "compute": "HomebrewAccel",
                                  "algorithm": "DroNet"})
    assert main(["analyze", config, "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["rates"]["compute_hz"] == 77.0


def test_json_output_is_byte_deterministic(tmp_path, capsys):
    path = write_doc(tmp_path, pelican_doc())
    assert main(["analyze", path, "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["analyze", path, "--format", "json"]) == 0
    assert capsys.readouterr().out == first
