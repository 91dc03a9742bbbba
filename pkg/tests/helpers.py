"""Shared tilings, single-fault mutations and the coverage oracle."""
from __future__ import annotations

import random
from fractions import Fraction

from tritile.catalog import catalog, catalog_names
from tritile.exact import QuadNum
from tritile.generators import biquadratic, hexagonal, pythagorean, quadratic
from tritile.geometry import Location, Point, Triangle, locate
from tritile.tiling import Tiling

GENERIC = Triangle.of((0, 0), (7, 1), (2, 5))


def family_tilings() -> dict[str, Tiling]:
    out = {f"quadratic({n})": quadratic(GENERIC, n) for n in range(1, 9)}
    for m, n in [(1, 2), (2, 3), (5, 7)]:
        out[f"biquadratic({m},{n})"] = biquadratic(m, n)
    for k in range(5):
        out[f"hexagonal({k})"] = hexagonal(k)
    out["pythagorean(3,4,5)"] = pythagorean(3, 4, 5)
    return out


def catalog_tilings() -> dict[str, Tiling]:
    return {name: catalog(name) for name in catalog_names()}


def _moved(t: Triangle, f) -> Triangle:
    return Triangle(*(f(p) for p in t))


def _pick(tiling: Tiling) -> int:
    return tiling.N // 2


def shift_one(tiling: Tiling) -> Tiling:
    """Nudge one tile a little toward the middle of the reference."""
    i = _pick(tiling)
    g, h = tiling.reference.centroid(), tiling.tiles[i].centroid()
    dx, dy = (g.x - h.x) / 100, (g.y - h.y) / 100
    if not dx and not dy:
        dx = QuadNum(Fraction(1, 100))
    tiles = list(tiling.tiles)
    tiles[i] = _moved(tiles[i], lambda p: Point(p.x + dx, p.y + dy))
    return Tiling(tiling.reference, tiles)


def scale_one(tiling: Tiling) -> Tiling:
    i = _pick(tiling)
    g = tiling.tiles[i].centroid()
    k = Fraction(9, 10)
    tiles = list(tiling.tiles)
    tiles[i] = _moved(tiles[i], lambda p: Point(g.x + (p.x - g.x) * k, g.y + (p.y - g.y) * k))
    return Tiling(tiling.reference, tiles)


def delete_one(tiling: Tiling) -> Tiling:
    tiles = list(tiling.tiles)
    del tiles[_pick(tiling)]
    return Tiling(tiling.reference, tiles or [tiling.tiles[0]])


def duplicate_one(tiling: Tiling) -> Tiling:
    return Tiling(tiling.reference, list(tiling.tiles) + [tiling.tiles[_pick(tiling)]])


def swap_vertex(tiling: Tiling) -> Tiling:
    """Flip one tile across one of its edges: still congruent, same area."""
    i = _pick(tiling)
    a, b, c = tiling.tiles[i]
    # reflect a across line bc
    dx, dy = c.x - b.x, c.y - b.y
    t = ((a.x - b.x) * dx + (a.y - b.y) * dy) / (dx * dx + dy * dy)
    fx, fy = b.x + dx * t, b.y + dy * t
    tiles = list(tiling.tiles)
    tiles[i] = Triangle(Point(fx * 2 - a.x, fy * 2 - a.y), b, c)
    return Tiling(tiling.reference, tiles)


def wrong_shape(tiling: Tiling) -> Tiling:
    """Replace one tile by a same-area triangle of another shape on the same base."""
    i = _pick(tiling)
    a, b, c = tiling.tiles[i]
    tiles = list(tiling.tiles)
    tiles[i] = Triangle(a, b, Point(c.x + (b.x - a.x) / 3, c.y + (b.y - a.y) / 3))
    return Tiling(tiling.reference, tiles)


MUTATIONS = {
    "shift": (shift_one, "disjoint_ok"),
    "scale": (scale_one, "congruent_ok"),
    "delete": (delete_one, "area_ok"),
    "duplicate": (duplicate_one, "disjoint_ok"),
    "swap_vertex": (swap_vertex, "vertex_ok"),
    "wrong_shape": (wrong_shape, "congruent_ok"),
}


def random_point_in(ref: Triangle, rng: random.Random, den: int = 997) -> Point:
    """A random rational convex combination of the reference corners."""
    u, v = rng.randint(0, den), rng.randint(0, den)
    if u + v > den:
        u, v = den - u, den - v
    w = den - u - v
    a, b, c = ref
    s, t, r = Fraction(u, den), Fraction(v, den), Fraction(w, den)
    return Point(a.x * s + b.x * t + c.x * r, a.y * s + b.y * t + c.y * r)


def _bbox(t: Triangle):
    xs = [float(p.x) for p in t]
    ys = [float(p.y) for p in t]
    return min(xs) - 1e-9, max(xs) + 1e-9, min(ys) - 1e-9, max(ys) + 1e-9


def coverage_oracle(tiling: Tiling, samples: int = 1000, seed: int = 0) -> tuple[int, int]:
    """(uncovered points, interior points claimed by more than one tile).

    Float boxes only prune candidates; membership itself is exact.
    """
    rng = random.Random(seed)
    boxes = [_bbox(t) for t in tiling.tiles]
    uncovered = multiple = 0
    for _ in range(samples):
        p = random_point_in(tiling.reference, rng)
        fx, fy = float(p.x), float(p.y)
        hits = []
        for t, (x0, x1, y0, y1) in zip(tiling.tiles, boxes):
            if x0 <= fx <= x1 and y0 <= fy <= y1:
                loc = locate(p, t)
                if loc is not Location.OUTSIDE:
                    hits.append(loc)
        if not hits:
            uncovered += 1
        elif Location.INTERIOR in hits and len(hits) != 1:
            multiple += 1
    return uncovered, multiple
