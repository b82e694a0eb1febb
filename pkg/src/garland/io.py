"""Complex files and deterministic JSON output.

Complex file::

    {"name": "octahedron",
     "facets": [[0, 2, 4], ...],
     "weights": {"convention": "bs" | "explicit" | "normalized-top",
                 "table": {"0,2,4": "3/2", ...}}}

``weights`` is optional (defaults to "bs"). Rationals are "p/q" strings.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .complex import SimplicialComplex, build_complex
from .errors import InvalidInput
from .weights import CONVENTIONS, WeightFunction, bs_weight, validate_weight, weight_from_top


@dataclass
class LoadedInput:
    name: str
    complex: SimplicialComplex
    weight: WeightFunction
    raw: bytes


def parse_simplex_key(key: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in key.split(",") if p.strip() != "")
    except ValueError as exc:
        raise InvalidInput(f"bad simplex key {key!r}") from exc


def weight_from_json(X: SimplicialComplex, block: dict | None) -> WeightFunction:
    if not block:
        return bs_weight(X)
    convention = block.get("convention", "bs")
    if convention not in CONVENTIONS:
        raise InvalidInput(f"unknown weight convention {convention!r}")
    if convention == "bs":
        return bs_weight(X)
    table = {parse_simplex_key(k): v for k, v in (block.get("table") or {}).items()}
    try:
        if convention == "explicit":
            return validate_weight(X, table)
        return weight_from_top(X, table)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(str(exc)) from exc


def parse_complex(data: dict) -> tuple[str, SimplicialComplex, WeightFunction]:
    if not isinstance(data, dict) or "facets" not in data:
        raise InvalidInput("complex file needs a 'facets' list")
    try:
        X = build_complex(data["facets"])
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise InvalidInput(f"bad facet list: {exc}") from exc
    return str(data.get("name", "")), X, weight_from_json(X, data.get("weights"))


def load_complex_file(path) -> LoadedInput:
    path = Path(path)
    try:
        raw = path.read_bytes()
        data = json.loads(raw)
    except (OSError, ValueError) as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc
    name, X, W = parse_complex(data)
    return LoadedInput(name or path.stem, X, W, raw)


def complex_to_dict(X: SimplicialComplex, name: str = "", W: WeightFunction | None = None) -> dict:
    out: dict = {"name": name, "facets": [list(f) for f in X.facets]}
    if W is not None:
        out["weights"] = {
            "convention": "explicit",
            "table": {",".join(map(str, s)): str(m) for s, m in sorted(W.values.items())},
        }
    return out


def _encode(obj, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format(obj, ".17g") if math.isfinite(obj) else "null"
    if isinstance(obj, Fraction):
        return json.dumps(str(obj))
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(x, (int, float, str)) and not isinstance(x, bool) for x in obj):
            return "[" + ", ".join(_encode(x, indent, level + 1) for x in obj) + "]"
        items = [pad + _encode(x, indent, level + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent: int = 2) -> str:
    """JSON with floats at 17 significant digits and rationals as "p/q" strings."""
    return _encode(obj, indent, 0) + "\n"
