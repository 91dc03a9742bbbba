"""Exact-JSON tiling files.

Coordinates are strings in the exact number grammar, so writing a parsed
file reproduces it byte for byte.
"""
from __future__ import annotations

import json
from pathlib import Path

from .exact import QuadNum, parse_number
from .geometry import Point, Triangle
from .tiling import Tiling

__all__ = ["FormatError", "dumps", "loads", "read_tiling", "write_tiling"]


class FormatError(ValueError):
    pass


def _pt(p: Point) -> str:
    return json.dumps([str(p.x), str(p.y)])


def _tri(t: Triangle) -> str:
    return "[" + ", ".join(_pt(p) for p in t) + "]"


def dumps(tiling: Tiling) -> str:
    lines = ["{", f'  "radicand": {tiling.radicand},', f'  "reference": {_tri(tiling.reference)},', '  "tiles": [']
    body = [f"    {_tri(t)}" for t in tiling.tiles]
    lines.append(",\n".join(body))
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def _num(x, d: int) -> QuadNum:
    if not isinstance(x, str):
        raise FormatError(f"coordinate {x!r} must be a string in the exact number grammar")
    try:
        q = parse_number(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad number {x!r}: {exc}") from None
    if q.irr and q.radicand != d:
        raise FormatError(f"{x!r} uses sqrt({q.radicand}) but the file declares radicand {d}")
    return q


def _triangle(raw, d: int) -> Triangle:
    if not isinstance(raw, list) or len(raw) != 3:
        raise FormatError(f"a triangle needs three points, got {raw!r}")
    pts = []
    for p in raw:
        if not isinstance(p, list) or len(p) != 2:
            raise FormatError(f"a point needs two coordinates, got {p!r}")
        pts.append(Point(_num(p[0], d), _num(p[1], d)))
    return Triangle(*pts)


def loads(text: str) -> Tiling:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"radicand", "reference", "tiles"}:
        raise FormatError('expected an object with keys "radicand", "reference", "tiles"')
    d = doc["radicand"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise FormatError(f"radicand must be a positive integer, got {d!r}")
    tiles = doc["tiles"]
    if not isinstance(tiles, list) or not tiles:
        raise FormatError("tiles must be a nonempty list")
    return Tiling(_triangle(doc["reference"], d), [_triangle(t, d) for t in tiles])


def read_tiling(path: str | Path) -> Tiling:
    return loads(Path(path).read_text(encoding="utf-8"))


def write_tiling(tiling: Tiling, path: str | Path) -> None:
    Path(path).write_text(dumps(tiling), encoding="utf-8")
