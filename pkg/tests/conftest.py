import pytest

from skyline import builtin_presets


@pytest.fixture(scope="session")
def store():
    return builtin_presets()


def pelican_doc(algorithm="DroNet", extra_payload=None, name=None):
    doc = {
        "uav": {"name": "AscTec Pelican"},
        "compute": {"name": "Nvidia TX2"},
        "algorithm": {"name": algorithm},
    }
    if extra_payload is not None:
        doc["payload"] = extra_payload
    if name is not None:
        doc["name"] = name
    return doc


def spark_doc(platform, algorithm="DroNet"):
    return {
        "uav": {"name": "DJI Spark"},
        "compute": {"name": platform},
        "algorithm": {"name": algorithm},
    }


def synthetic_doc(a_max=50.0, sense_range=10.0, compute_hz=178.0, sensor_hz=60.0):
    """A physics-pinned configuration: declared a_max, nominal airframe."""
    return {
        "name": "synthetic",
        "uav": {"base_mass_g": 1000.0, "rotor_count": 4, "rotor_pull_gf": 400.0, "control_rate_hz": 1000.0},
        "sensor": {"framerate_hz": sensor_hz, "range_m": sense_range},
        "algorithm": {"throughput_hz": compute_hz},
        "model": {"a_max_mps2": a_max},
    }
