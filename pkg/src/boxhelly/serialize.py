"""FamilyFile JSON: exact rationals as strings, one record per interval."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from .geometry import Box, BoxFamily, Endpoint, Interval


class FamilyFormatError(ValueError):
    """A FamilyFile could not be parsed into a valid family."""


def rational_str(x: Fraction) -> str:
    """Canonical lowest-terms text, ``"p/q"`` or ``"p"`` when q = 1."""
    return str(Fraction(x))


def family_to_dict(f: BoxFamily) -> dict[str, Any]:
    data: dict[str, Any] = {"dim": f.dim}
    if f.label is not None:
        data["label"] = f.label
    data["boxes"] = [
        [
            {
                "lo": rational_str(iv.lo.value),
                "hi": rational_str(iv.hi.value),
                "lo_open": iv.lo.open,
                "hi_open": iv.hi.open,
            }
            for iv in box.intervals
        ]
        for box in f.boxes
    ]
    return data


def _parse_rational(x: Any) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise FamilyFormatError(f"coordinate must be a rational string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise FamilyFormatError(f"bad rational {x!r}") from exc


def family_from_dict(data: Any) -> BoxFamily:
    try:
        dim = data["dim"]
        raw_boxes = data["boxes"]
        label = data.get("label")
        boxes = []
        for b, raw in enumerate(raw_boxes):
            if len(raw) != dim:
                raise FamilyFormatError(f"box {b} has {len(raw)} intervals, expected {dim}")
            ivs = []
            for rec in raw:
                lo = Endpoint(_parse_rational(rec["lo"]), bool(rec.get("lo_open", False)))
                hi = Endpoint(_parse_rational(rec["hi"]), bool(rec.get("hi_open", False)))
                ivs.append(Interval(lo, hi))
            boxes.append(Box(tuple(ivs)))
        return BoxFamily(dim, tuple(boxes), label)
    except FamilyFormatError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise FamilyFormatError(f"invalid family file: {exc}") from exc


def dumps_family(f: BoxFamily) -> str:
    return json.dumps(family_to_dict(f), indent=2) + "\n"


def loads_family(text: str) -> BoxFamily:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyFormatError(f"not valid JSON: {exc}") from exc
    return family_from_dict(data)


def write_family(f: BoxFamily, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps_family(f), encoding="utf-8")


def read_family(path: Union[str, Path]) -> BoxFamily:
    return loads_family(Path(path).read_text(encoding="utf-8"))
