"""Reading and writing curve specs as JSON.

Schema (unknown keys are rejected everywhere)::

    {
      "name": "...",                      optional
      "description": "...",               optional
      "polynomial": "x^3 + y^3 + z^3",    optional defining equation
      "components": [
        {"label": "E", "degree": 3, "genus_check": 1,
         "own_germs": [GERM, ...]}
      ],
      "shared_points": [
        {"label": "p1", "transverse": true,
         "incidences": [{"component": 0, "germ": "smooth"},
                        {"component": 1, "germ": GERM}],
         "mu": 16, "tjurina": 16, "weighted_homogeneous": true}
      ]
    }

GERM is either an object ``{"mu", "branches", "tjurina", "multiplicity",
"ordinary", "weighted_homogeneous"}`` (``mu`` and ``branches`` required,
``multiplicity`` defaults to 2) or one of the shorthands ``"node"``,
``"cusp"``, ``"ordinary:<m>"``.  In an incidence, ``"germ"`` defaults to
``"smooth"``; ``"transverse"`` defaults to true.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

import jsonschema

from .curve import CUSP, NODE, SMOOTH, Component, CurveSpec, Germ, Incidence, SharedPoint, ordinary_germ


class SpecFormatError(ValueError):
    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


_INT0 = {"type": "integer", "minimum": 0}
_GERM_OBJECT = {
    "type": "object",
    "additionalProperties": False,
    "required": ["mu", "branches"],
    "properties": {
        "mu": {"type": "integer"},
        "branches": {"type": "integer"},
        "tjurina": {"type": "integer"},
        "multiplicity": {"type": "integer"},
        "ordinary": {"type": "boolean"},
        "weighted_homogeneous": {"type": "boolean"},
    },
}
_GERM_SHORT = {"type": "string", "pattern": r"^(node|cusp|ordinary:[0-9]+)$"}

SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["components"],
    "properties": {
        "name": {"type": "string"},
        "description": {"type": "string"},
        "polynomial": {"type": "string"},
        "components": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["degree"],
                "properties": {
                    "label": {"type": "string"},
                    "degree": {"type": "integer", "minimum": 1},
                    "genus_check": _INT0,
                    "own_germs": {"type": "array",
                                  "items": {"oneOf": [_GERM_OBJECT, _GERM_SHORT]}},
                },
            },
        },
        "shared_points": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["incidences"],
                "properties": {
                    "label": {"type": "string"},
                    "transverse": {"type": "boolean"},
                    "mu": {"type": "integer"},
                    "tjurina": {"type": "integer"},
                    "weighted_homogeneous": {"type": "boolean"},
                    "incidences": {
                        "type": "array",
                        "minItems": 2,
                        "items": {
                            "type": "object",
                            "additionalProperties": False,
                            "required": ["component"],
                            "properties": {
                                "component": _INT0,
                                "germ": {"oneOf": [_GERM_OBJECT, _GERM_SHORT,
                                                   {"const": "smooth"}]},
                            },
                        },
                    },
                },
            },
        },
    },
}


def _json_path(error: jsonschema.ValidationError) -> str:
    out = "$"
    for part in error.absolute_path:
        out += f"[{part}]" if isinstance(part, int) else f".{part}"
    return out


def _germ(data) -> Germ:
    if isinstance(data, str):
        if data == "node":
            return NODE
        if data == "cusp":
            return CUSP
        return ordinary_germ(int(data.split(":", 1)[1]))
    return Germ(
        mu=data["mu"],
        branches=data["branches"],
        tjurina=data.get("tjurina"),
        multiplicity=data.get("multiplicity", 2),
        ordinary=data.get("ordinary", False),
        weighted_homogeneous=data.get("weighted_homogeneous"),
    )


def spec_from_dict(data: dict) -> CurveSpec:
    validator = jsonschema.Draft202012Validator(SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        # oneOf failures bury the useful message; report the deepest one
        err = errors[0]
        while err.context:
            err = max(err.context, key=lambda e: len(e.absolute_path))
        raise SpecFormatError(err.message, _json_path(err))
    try:
        components = tuple(
            Component(
                degree=c["degree"],
                own_germs=tuple(_germ(g) for g in c.get("own_germs", [])),
                label=c.get("label"),
                genus_check=c.get("genus_check"),
            )
            for c in data["components"]
        )
        shared = tuple(
            SharedPoint(
                incidences=tuple(
                    Incidence(inc["component"],
                              SMOOTH if inc.get("germ", "smooth") == "smooth"
                              else _germ(inc["germ"]))
                    for inc in sp["incidences"]
                ),
                transverse=sp.get("transverse", True),
                label=sp.get("label"),
                mu=sp.get("mu"),
                tjurina=sp.get("tjurina"),
                weighted_homogeneous=sp.get("weighted_homogeneous"),
            )
            for sp in data.get("shared_points", [])
        )
    except ValueError as exc:
        raise SpecFormatError(str(exc)) from exc
    return CurveSpec(components, shared, name=data.get("name"),
                     polynomial=data.get("polynomial"))


def _germ_to_dict(g: Germ) -> dict:
    out = {"mu": g.mu, "branches": g.branches, "tjurina": g.tjurina,
           "multiplicity": g.multiplicity, "ordinary": g.ordinary,
           "weighted_homogeneous": g.weighted_homogeneous}
    return {k: v for k, v in out.items() if v is not None}


def spec_to_dict(spec: CurveSpec) -> dict:
    out: dict = {}
    if spec.name is not None:
        out["name"] = spec.name
    if spec.polynomial is not None:
        out["polynomial"] = spec.polynomial
    comps = []
    for c in spec.components:
        d: dict = {"degree": c.degree}
        if c.label is not None:
            d["label"] = c.label
        if c.genus_check is not None:
            d["genus_check"] = c.genus_check
        if c.own_germs:
            d["own_germs"] = [_germ_to_dict(g) for g in c.own_germs]
        comps.append(d)
    out["components"] = comps
    points = []
    for sp in spec.shared_points:
        d = {"incidences": [
            {"component": inc.component,
             "germ": "smooth" if inc.smooth else _germ_to_dict(inc.germ)}
            for inc in sp.incidences], "transverse": sp.transverse}
        for key in ("label", "mu", "tjurina", "weighted_homogeneous"):
            if getattr(sp, key) is not None:
                d[key] = getattr(sp, key)
        points.append(d)
    if points:
        out["shared_points"] = points
    return out


def load_spec(path: str | Path) -> CurveSpec:
    """Load a spec from a JSON file, or a bundled one as ``corpus:<name>``."""
    text = read_text(path, suffix=".json")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"invalid JSON: {exc}") from exc
    return spec_from_dict(data)


def read_text(path: str | Path, suffix: str = "") -> str:
    path = str(path)
    if path.startswith("corpus:"):
        name = path.split(":", 1)[1]
        if suffix and not name.endswith(suffix) and "." not in name:
            name += suffix
        return resources.files("planehodge.corpus").joinpath(name).read_text(encoding="utf-8")
    return Path(path).read_text(encoding="utf-8")


def corpus_names(suffix: str = ".json") -> list[str]:
    root = resources.files("planehodge.corpus")
    return sorted(p.name[: -len(suffix)] for p in root.iterdir() if p.name.endswith(suffix))
