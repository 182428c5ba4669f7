"""Versioned JSON documents: curve input, configurations, smoothing scripts and canonical output."""

from __future__ import annotations

import json
from fractions import Fraction
from math import ceil, floor
from pathlib import Path
from typing import Any

from .exact import AlgebraicNumber, RationalFormatError, format_rat
from .plane_model import Configuration, ConfigurationError, Trisection, trisection_from_json
from .plane_model.trisection import InvalidTrisection, NotATrisection
from .topology import SmoothingChoice

SCHEMA_VERSION = 1
GRID_BITS = 24
CURVE_KEYS = {"schema_version", "name", "chart", "a", "b", "c", "sections", "cover_sign"}


class InputError(ValueError):
    """A document failed validation; nothing was computed."""


def dumps(obj: Any) -> str:
    """Canonical text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def stamp(obj: dict[str, Any], kind: str) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "document": kind, **obj}


def algebraic_to_json(a: AlgebraicNumber | None) -> Any:
    """"p/q" for rationals, an isolating interval with its defining polynomial otherwise."""
    if a is None:
        return "infinity"
    if a.is_rational:
        return format_rat(a.value)
    # snap to a fixed dyadic grid so the text does not depend on refinement history
    scale = 2 ** GRID_BITS
    a.refine(Fraction(1, scale))
    lo = Fraction(floor(a.lo * scale), scale)
    hi = Fraction(ceil(a.hi * scale), scale)
    return {"interval": [format_rat(lo), format_rat(hi)],
            "poly": [format_rat(c) for c in a.poly.coeffs],
            "approx": f"{float(a):.12g}"}


def read_document(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _check_version(obj: dict[str, Any]) -> None:
    v = obj.get("schema_version", SCHEMA_VERSION)
    if v != SCHEMA_VERSION:
        raise InputError(f"unsupported schema_version {v!r}; expected {SCHEMA_VERSION}")


def curve_from_json(obj: Any) -> tuple[Trisection, int, str]:
    """Validate a curve document and return (trisection, cover sign, name)."""
    if not isinstance(obj, dict):
        raise InputError("curve document must be a JSON object")
    _check_version(obj)
    extra = set(obj) - CURVE_KEYS
    if extra:
        raise InputError(f"unknown curve fields {sorted(extra)}")
    if "sections" in obj and any(k in obj for k in ("a", "b", "c")):
        raise InputError("give either coefficients or sections, not both")
    if obj.get("chart", "U") not in ("U", "infinity"):
        raise InputError("chart must be 'U' or 'infinity'")
    sign = obj.get("cover_sign", 1)
    if sign not in (1, -1) or isinstance(sign, bool):
        raise InputError("cover_sign must be 1 or -1")
    try:
        t = trisection_from_json(obj)
    except (InvalidTrisection, NotATrisection, RationalFormatError, KeyError, TypeError,
            AttributeError) as exc:
        raise InputError(f"invalid curve: {exc}") from exc
    except ValueError as exc:
        raise InputError(f"invalid curve: {exc}") from exc
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise InputError("name must be a string")
    return t, sign, name


def curve_to_json(t: Trisection, sign: int = 1, name: str = "") -> dict[str, Any]:
    out = {"schema_version": SCHEMA_VERSION, **t.to_json(), "cover_sign": sign}
    if name:
        out["name"] = name
    return out


def load_curve(path: str | Path) -> tuple[Trisection, int, str]:
    return curve_from_json(read_document(path))


def save_curve(path: str | Path, t: Trisection, sign: int = 1, name: str = "") -> None:
    Path(path).write_text(dumps(curve_to_json(t, sign, name)))


def config_from_json(obj: Any) -> Configuration:
    """A bare list of points, or {"schema_version", "configuration": [...]}."""
    if isinstance(obj, dict):
        _check_version(obj)
        obj = obj.get("configuration")
    if not isinstance(obj, list):
        raise InputError("configuration must be a list of points")
    try:
        return Configuration.from_json(obj)
    except ConfigurationError as exc:
        raise InputError(f"invalid configuration: {exc}") from exc


def parse_config_label(text: str) -> Configuration:
    """'A3+2A2+A1' style labels; every point gets sign '+'."""
    mus: list[int] = []
    for part in text.replace(" ", "").split("+"):
        if not part:
            continue
        count, _, mu = part.partition("A")
        try:
            k = int(count) if count else 1
            m = int(mu)
        except ValueError as exc:
            raise InputError(f"cannot read configuration label {text!r}") from exc
        if k < 1 or m < 1:
            raise InputError(f"cannot read configuration label {text!r}")
        mus.extend([m] * k)
    if not mus:
        raise InputError("empty configuration label")
    return Configuration.of(*mus)


def script_from_json(obj: Any) -> list[tuple[str, SmoothingChoice]]:
    if isinstance(obj, dict):
        _check_version(obj)
        obj = obj.get("script")
    if not isinstance(obj, list):
        raise InputError("smoothing script must be a list of {point_id, choice}")
    out = []
    for item in obj:
        if not isinstance(item, dict) or "point_id" not in item or "choice" not in item:
            raise InputError("script entries need 'point_id' and 'choice'")
        try:
            out.append((str(item["point_id"]), SmoothingChoice(item["choice"])))
        except ValueError as exc:
            raise InputError(f"unknown smoothing choice {item['choice']!r}") from exc
    return out
