"""JSON encodings.  Rationals always travel as canonical strings."""

from __future__ import annotations

import json
import os
from pathlib import Path

from .charges import ComplexQ
from .errors import ParseError
from .inequalities import DiscriminantReport
from .numlattice import NumClass, SlopeValue, VarietyModel
from .polycharge import PolyCharge
from .rational import format_rational as fmt
from .rational import parse_rational
from .walls import PseudoWall, WallConic


def _obj(data, keys, what):
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON for {what}: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in data]
    if missing:
        raise ParseError(f"{what} is missing {missing}")
    return data


def _rat(x):
    if not isinstance(x, str):
        raise ParseError(f"rationals must be strings, got {x!r}")
    return parse_rational(x)


def numclass_to_json(v: NumClass) -> dict:
    return {"r": fmt(v.r), "c": fmt(v.c), "d2": fmt(v.d2), "d3": fmt(v.d3)}


def numclass_from_json(data) -> NumClass:
    data = _obj(data, ("r", "c", "d2", "d3"), "NumClass")
    return NumClass(*(_rat(data[k]) for k in ("r", "c", "d2", "d3")))


def model_to_json(m: VarietyModel) -> dict:
    return {"name": m.name, "d": m.d, "lam2": m.lam2, "lam3": m.lam3}


def model_from_json(data) -> VarietyModel:
    data = _obj(data, ("name", "d", "lam2", "lam3"), "VarietyModel")
    try:
        return VarietyModel(str(data["name"]), data["d"], data["lam2"], data["lam3"])
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def complex_to_json(z: ComplexQ) -> dict:
    return {"re": fmt(z.re), "im": fmt(z.im)}


def complex_from_json(data) -> ComplexQ:
    data = _obj(data, ("re", "im"), "ComplexQ")
    return ComplexQ(_rat(data["re"]), _rat(data["im"]))


def slope_to_json(s: SlopeValue) -> dict:
    return {"infinite": True} if s.is_infinite else {"finite": fmt(s.value)}


def slope_from_json(data) -> SlopeValue:
    data = _obj(data, (), "SlopeValue")
    if data.get("infinite") is True and "finite" not in data:
        return SlopeValue(None)
    if "finite" in data and "infinite" not in data:
        return SlopeValue(_rat(data["finite"]))
    raise ParseError("SlopeValue needs exactly one of 'finite' or 'infinite': true")


def polycharge_to_json(p: PolyCharge) -> dict:
    return {"coeffs": [complex_to_json(c) for c in p.coeffs]}


def polycharge_from_json(data) -> PolyCharge:
    data = _obj(data, ("coeffs",), "PolyCharge")
    coeffs = data["coeffs"]
    if not isinstance(coeffs, list) or len(coeffs) != 4:
        raise ParseError("PolyCharge needs exactly four coefficients")
    return PolyCharge(tuple(complex_from_json(c) for c in coeffs))


def discriminants_to_json(rep: DiscriminantReport) -> dict:
    return {k: fmt(getattr(rep, k)) for k in ("delta", "delta_bar", "d1", "d2h", "d3h")}


def discriminants_from_json(data) -> DiscriminantReport:
    keys = ("delta", "delta_bar", "d1", "d2h", "d3h")
    data = _obj(data, keys, "DiscriminantReport")
    return DiscriminantReport(*(_rat(data[k]) for k in keys))


def verdict_to_json(holds: bool, margin) -> dict:
    return {"holds": bool(holds), "margin": fmt(margin)}


def conic_to_json(wc: WallConic) -> dict:
    return {k: fmt(getattr(wc, k)) for k in ("u0", "u1", "q0", "q1", "q2")}


def conic_from_json(data) -> WallConic:
    keys = ("u0", "u1", "q0", "q1", "q2")
    data = _obj(data, keys, "WallConic")
    return WallConic(*(_rat(data[k]) for k in keys))


def wall_to_json(pw: PseudoWall) -> dict:
    return {
        "w": {"r": fmt(pw.r), "c": fmt(pw.c), "d2": fmt(pw.d2)},
        "conic": conic_to_json(pw.conic),
    }


def walls_to_json(walls) -> list:
    return [wall_to_json(pw) for pw in walls]


def load_model_file(name: str) -> VarietyModel:
    """Find ``<name>.json`` (or ``name`` itself) on TILTWALL_MODEL_PATH."""
    search = os.environ.get("TILTWALL_MODEL_PATH", "")
    for folder in filter(None, search.split(os.pathsep)):
        for candidate in (Path(folder) / f"{name}.json", Path(folder) / name):
            if candidate.is_file():
                return model_from_json(candidate.read_text())
    raise ParseError(f"no model file for {name!r} on TILTWALL_MODEL_PATH")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=False)
