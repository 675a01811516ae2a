import math

import pytest
import yaml

from dyncasimir.config import ScenarioError, build, load_scenario, motion_omega, validate
from dyncasimir.units import C_SI

ROOT = __file__.rsplit("/tests/", 1)[0]
NAMES = ["macroscopic_plate", "nanoscale_plate", "josephson", "josephson_ac", "mercury"]


@pytest.mark.parametrize("name", NAMES)
def test_shipped_scenarios_validate(name):
    doc = load_scenario("%s/scenarios/%s.yaml" % (ROOT, name))
    if "plate1" in doc:
        build(doc)


def test_cyclic_frequency():
    doc = load_scenario(ROOT + "/scenarios/macroscopic_plate.yaml")
    w = motion_omega(doc)
    k = doc["plate1"]["k"][0]
    assert w / k == pytest.approx(4 * math.pi, rel=1e-6)


@pytest.mark.parametrize("doc", [
    {},
    {"observables": ["nope"]},
    {"observables": ["mass_single"]},
    {"observables": ["capillary"]},
    {"observables": ["casimir"], "statics": {"H": -1}},
    {"observables": ["josephson_dc"], "plate1": {"d": 1, "k": [1, 0]}},
    {"observables": ["mass_double"], "plate1": {"d": 1, "k": [1, 0]}},
    {"observables": ["chi"], "plate1": {"d": 1, "k": [1, 0]}, "extra": 1},
    {"observables": ["chi"], "plate1": {"d": 1, "k": [1, 0]},
     "motion": {"type": "oscillatory", "amplitude": [1, 0]}},
    {"observables": ["chi"], "plate1": {"d": 1, "k": [1, 0]}, "tolerance": 1.0},
])
def test_rejects(doc):
    with pytest.raises(ScenarioError):
        validate(doc)


def test_si_speeds_converted():
    doc = validate({"observables": ["josephson_ac"], "H": 1e-6,
                    "plate1": {"d": 1e-8, "k": [1e6, 0]}, "plate2": {"d": 1e-8, "k": [1e6, 0]},
                    "motion": {"type": "uniform", "v": [3.0, 0.0]}})
    sc = build(doc)
    assert sc.motion.v[0] == pytest.approx(3.0 / C_SI)


def test_bad_yaml(tmp_path):
    p = tmp_path / "x.yaml"
    p.write_text("a: [1, 2\n")
    with pytest.raises(ScenarioError):
        load_scenario(str(p))
    p.write_text(yaml.safe_dump([1, 2]))
    with pytest.raises(ScenarioError):
        load_scenario(str(p))
    with pytest.raises(ScenarioError):
        load_scenario(str(tmp_path / "missing.yaml"))
