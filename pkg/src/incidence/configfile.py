"""Reading and writing configuration files.

A configuration file is a JSON object::

    {
      "format": "incidence-config/1",
      "tower": [{"name": "t", "kind": "transcendental"},
                {"name": "s", "kind": "algebraic", "minpoly": ["-t", "0", "1"]}],
      "points": [["t", "0"], ["1/2", "s"]],
      "lines": [["1", "0", "-t"]],
      "curves": [{"x^2*y^0": "1", "x^0*y^1": "-1"}],
      "sets": {"A": ["1", "2", "3"]}
    }

Every scalar is an element expression string (plain JSON integers are
accepted on input); minimal polynomial coefficients are listed constant term
first.  All sections except ``tower`` are optional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .curves import Curve
from .field import TowerDescriptor
from .geometry import Configuration, Point, canonical_line
from .sumproduct import ElementSet

FORMAT = "incidence-config/1"


class InputError(ValueError):
    pass


@dataclass
class ConfigFile:
    config: Configuration
    curves: list[Curve] = field(default_factory=list)
    sets: dict[str, ElementSet] = field(default_factory=dict)

    @property
    def tower(self) -> TowerDescriptor:
        return self.config.tower


def _expr(v: Any) -> str:
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise InputError(f"expected an element expression string, got {v!r}")
    return str(v)


def from_dict(doc: dict) -> ConfigFile:
    if not isinstance(doc, dict):
        raise InputError("configuration must be a JSON object")
    fmt = doc.get("format", FORMAT)
    if fmt != FORMAT:
        raise InputError(f"unsupported format {fmt!r}")
    tower = TowerDescriptor.from_dict(doc.get("tower", []))
    e = lambda v: tower.element(_expr(v))

    points = []
    for entry in doc.get("points", []):
        if len(entry) != 2:
            raise InputError(f"a point needs 2 coordinates, got {entry!r}")
        points.append(Point(e(entry[0]), e(entry[1])))
    lines = []
    for entry in doc.get("lines", []):
        if len(entry) != 3:
            raise InputError(f"a line needs 3 coefficients, got {entry!r}")
        lines.append(canonical_line(e(entry[0]), e(entry[1]), e(entry[2]), tower))
    curves = []
    for entry in doc.get("curves", []):
        curves.append(Curve.from_coefficients({k: _expr(v) for k, v in entry.items()}, tower))
    sets = {}
    for name, items in doc.get("sets", {}).items():
        sets[name] = ElementSet.of(e(v) for v in items)
    return ConfigFile(Configuration.build(points, lines, tower), list(dict.fromkeys(curves)), sets)


def to_dict(cf: ConfigFile) -> dict:
    cfg = cf.config
    doc: dict[str, Any] = {"format": FORMAT, "tower": cfg.tower.to_dict()}
    doc["points"] = [list(p.encode()) for p in cfg.points]
    doc["lines"] = [list(l.encode()) for l in cfg.lines]
    if cf.curves:
        doc["curves"] = [c.to_dict() for c in cf.curves]
    if cf.sets:
        doc["sets"] = {k: v.encode() for k, v in cf.sets.items()}
    return doc


def load(path: str | Path) -> ConfigFile:
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise InputError(f"cannot read {path}: {err.strerror or err}") from err
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(f"{path} is not valid JSON: {err}") from err
    return from_dict(doc)


def dumps(cf: ConfigFile) -> str:
    return json.dumps(to_dict(cf), indent=1)


def save(cf: ConfigFile, path: str | Path) -> None:
    Path(path).write_text(dumps(cf) + "\n")
