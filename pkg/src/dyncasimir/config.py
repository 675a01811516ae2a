"""Scenario files: schema, validation and construction of model objects.

A scenario is a YAML document. Lengths, speeds and frequencies are read
in the unit system named by ``units`` (``si`` by default: meters, m/s,
rad/s; ``natural``: meters with c = 1). Example::

    units: si
    area: 1.0
    plate1: {d: 1.0e-3, k: [6283.185307179586, 0.0], density: 15000, thickness: 1.0e-3}
    motion: {type: oscillatory, amplitude: [1.0e-9, 0.0], frequency_hz: 3.767e12}
    observables: [mass_single, viscosity_single]

See ``scenarios/`` for complete files.
"""
import math

import jsonschema
import yaml

from .response import CavityScenario, CorrugatedPlate, Oscillatory, Static, Uniform
from .units import C_SI

__all__ = ["SCHEMA", "ScenarioError", "load_scenario", "validate", "build"]

OBSERVABLES = [
    "mass_single",
    "viscosity_single",
    "mass_double",
    "chi",
    "dissipation",
    "josephson_dc",
    "josephson_ac",
    "capillary",
    "casimir",
]

_vec2 = {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}
_length_or_inf = {"oneOf": [{"type": "number", "exclusiveMinimum": 0},
                            {"type": "string", "enum": ["inf", "infinite"]}]}

_plate = {
    "type": "object",
    "additionalProperties": False,
    "required": ["d", "k"],
    "properties": {
        "d": {"type": "number", "minimum": 0},
        "k": _vec2,
        "phase": {"type": "number"},
        "density": {"type": "number", "exclusiveMinimum": 0},
        "thickness": {"type": "number", "exclusiveMinimum": 0},
    },
}

_motion = {
    "oneOf": [
        {"type": "object", "additionalProperties": False, "required": ["type"],
         "properties": {"type": {"const": "static"}, "offset": _vec2}},
        {"type": "object", "additionalProperties": False, "required": ["type", "v"],
         "properties": {"type": {"const": "uniform"}, "v": _vec2,
                        "duration": {"type": "number", "exclusiveMinimum": 0}}},
        {"type": "object", "additionalProperties": False, "required": ["type", "amplitude"],
         "properties": {"type": {"const": "oscillatory"}, "amplitude": _vec2,
                        "omega": {"type": "number", "exclusiveMinimum": 0},
                        "frequency_hz": {"type": "number", "exclusiveMinimum": 0}}},
    ]
}

SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["observables"],
    "properties": {
        "name": {"type": "string"},
        "description": {"type": "string"},
        "units": {"enum": ["si", "natural"]},
        "tolerance": {"type": "number", "exclusiveMinimum": 1e-12, "exclusiveMaximum": 1e-2},
        "area": {"type": "number", "exclusiveMinimum": 0},
        "H": _length_or_inf,
        "plate1": _plate,
        "plate2": _plate,
        "motion": _motion,
        "fluid": {"type": "object", "additionalProperties": False, "required": ["sigma", "H"],
                  "properties": {"sigma": {"type": "number", "exclusiveMinimum": 0},
                                 "H": {"type": "number", "exclusiveMinimum": 0}}},
        "statics": {"type": "object", "additionalProperties": False, "required": ["H"],
                    "properties": {"H": {"type": "number", "exclusiveMinimum": 0},
                                   "area": {"type": "number", "exclusiveMinimum": 0}}},
        "observables": {"type": "array", "minItems": 1, "uniqueItems": True,
                        "items": {"enum": OBSERVABLES}},
    },
}

_NEEDS_PLATE = {"mass_single", "viscosity_single", "mass_double", "chi", "dissipation",
                "josephson_dc", "josephson_ac"}


class ScenarioError(ValueError):
    """Schema or consistency violation in a scenario document."""


def validate(doc):
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ScenarioError("%s: %s" % (path, exc.message)) from None
    obs = set(doc["observables"])
    if obs & _NEEDS_PLATE and "plate1" not in doc:
        raise ScenarioError("observables %s need plate1" % sorted(obs & _NEEDS_PLATE))
    if obs & {"josephson_dc", "josephson_ac"} and "plate2" not in doc:
        raise ScenarioError("Josephson observables need plate2")
    if "mass_double" in obs and isinstance(doc.get("H", "inf"), str):
        raise ScenarioError("mass_double needs a finite H")
    if "plate2" in doc and isinstance(doc.get("H", "inf"), str):
        raise ScenarioError("two plates need a finite H")
    if "capillary" in obs and "fluid" not in doc:
        raise ScenarioError("capillary needs a fluid section")
    if "casimir" in obs and "statics" not in doc:
        raise ScenarioError("casimir needs a statics section")
    m = doc.get("motion", {})
    if m.get("type") == "oscillatory" and ("omega" in m) == ("frequency_hz" in m):
        raise ScenarioError("oscillatory motion needs exactly one of omega, frequency_hz")
    return doc


def load_scenario(path):
    try:
        with open(path) as fh:
            doc = yaml.safe_load(fh)
    except OSError as exc:
        raise ScenarioError("cannot read %s: %s" % (path, exc.strerror)) from None
    except yaml.YAMLError as exc:
        raise ScenarioError("not a YAML document: %s" % exc) from None
    if not isinstance(doc, dict):
        raise ScenarioError("scenario must be a mapping")
    return validate(doc)


def _speed(doc):
    """Factor turning the document's speeds/frequencies into natural units."""
    return 1.0 / C_SI if doc.get("units", "si") == "si" else 1.0


def motion_omega(doc):
    """Angular frequency of an oscillatory motion in natural units (1/m)."""
    m = doc.get("motion", {})
    if m.get("type") != "oscillatory":
        return None
    if "frequency_hz" in m:
        w = 2.0 * math.pi * m["frequency_hz"]
    else:
        w = m["omega"]
    return w * _speed(doc)


def build(doc):
    """CavityScenario (natural units) described by a validated document."""
    f = _speed(doc)

    def plate(p):
        return CorrugatedPlate(p["d"], tuple(p["k"]), p.get("phase", 0.0))

    p1 = plate(doc["plate1"])
    p2 = plate(doc["plate2"]) if "plate2" in doc else None
    H = doc.get("H", "inf")
    H = math.inf if isinstance(H, str) else float(H)
    if p2 is None:
        H = math.inf
    m = doc.get("motion", {"type": "static"})
    if m["type"] == "static":
        motion = Static(tuple(m.get("offset", (0.0, 0.0))))
    elif m["type"] == "uniform":
        motion = Uniform(tuple(v * f for v in m["v"]))
    else:
        motion = Oscillatory(tuple(m["amplitude"]), motion_omega(doc))
    try:
        return CavityScenario(p1, p2, H, doc.get("area", 1.0), motion)
    except ValueError as exc:
        raise ScenarioError(str(exc)) from None
