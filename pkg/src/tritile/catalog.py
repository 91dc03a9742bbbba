"""Exact digitizations of individual tilings shown as figures."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .exact import QuadNum
from .generators import quadratic
from .geometry import Point, Triangle
from .tiling import Tiling

__all__ = ["CatalogEntry", "catalog", "catalog_entry", "catalog_names"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    tiling: Tiling
    provenance: str


def _tiling(ref, tiles) -> Tiling:
    return Tiling(Triangle.of(*ref), [Triangle.of(*t) for t in tiles])


def _five_b() -> Tiling:
    # Figure "Two 5-tilings", right-hand picture, reflected x -> 5 - x so the
    # reference matches biquadratic(1, 2): A=(0,0), B=(1,2), C=(5,0).
    return _tiling(
        [(0, 0), (1, 2), (5, 0)],
        [
            [(0, 0), (1, 0), (1, 2)],
            [(3, 0), (5, 0), (3, 1)],
            [(1, 0), (3, 0), (3, 1)],
            [(1, 0), (3, 1), (1, 1)],
            [(1, 1), (3, 1), (1, 2)],
        ],
    )


def _nine_nonstandard() -> Tiling:
    # Figure "Another 9-tiling"; the picture's unit grid is exact.
    return _tiling(
        [(0, 0), (6, 0), (6, 3)],
        [
            [(0, 0), (2, 0), (2, 1)],
            [(2, 0), (4, 0), (4, 1)],
            [(2, 0), (4, 1), (2, 1)],
            [(2, 1), (4, 1), (4, 2)],
            [(4, 0), (5, 0), (5, 2)],
            [(4, 0), (5, 2), (4, 2)],
            [(5, 0), (6, 0), (6, 2)],
            [(5, 0), (6, 2), (5, 2)],
            [(4, 2), (6, 2), (6, 3)],
        ],
    )


def _twelve_b() -> Tiling:
    # Figure "Two 12-tilings", right-hand (prime) picture.  The drawing's grid
    # is x in multiples of 1/2 and y in multiples of sqrt(3)/2 once the long
    # leg is scaled to 6.
    h = "0+1/2*sqrt(3)"
    h2 = "0+1*sqrt(3)"
    h3 = "0+3/2*sqrt(3)"
    h4 = "0+2*sqrt(3)"
    return _tiling(
        [(0, 0), (6, 0), (6, h4)],
        [
            [(0, 0), (2, 0), ("3/2", h)],
            [(2, 0), (3, h2), ("3/2", h)],
            [(2, 0), (3, h2), ("7/2", h)],
            [(2, 0), (4, 0), ("7/2", h)],
            [(4, 0), (5, h2), ("7/2", h)],
            [(3, h2), ("7/2", h), (5, h2)],
            [(4, 0), (5, 0), (5, h2)],
            [(5, 0), (6, 0), (5, h2)],
            [(6, 0), (6, h2), (5, h2)],
            [(3, h2), (5, h2), ("9/2", h3)],
            [(5, h2), (6, h4), ("9/2", h3)],
            [(5, h2), (6, h2), (6, h4)],
        ],
    )


def _thirteen() -> Tiling:
    # Figure "A 13-tiling": right angle at B=(9,6), altitude foot (9,0).
    return _tiling(
        [(0, 0), (9, 6), (13, 0)],
        [
            [(0, 0), (3, 0), (3, 2)],
            [(3, 0), (6, 0), (6, 2)],
            [(3, 0), (6, 2), (3, 2)],
            [(6, 0), (9, 0), (9, 2)],
            [(6, 0), (9, 2), (6, 2)],
            [(3, 2), (6, 2), (6, 4)],
            [(6, 2), (9, 2), (9, 4)],
            [(6, 2), (9, 4), (6, 4)],
            [(6, 4), (9, 4), (9, 6)],
            [(9, 0), (11, 0), (9, 3)],
            [(11, 0), (13, 0), (11, 3)],
            [(9, 3), (11, 0), (11, 3)],
            [(9, 3), (11, 3), (9, 6)],
        ],
    )


def _nonquadratic_3a2b() -> Tiling:
    # Tile a=2, b=3 with cos(gamma) = -1/3, so c = sqrt(17) is the longest
    # side.  Start from the quadratic 25-tiling (a edges horizontal, b edges
    # along AB) and retile the rhombus 3a x 2b at A with a and b swapped.
    a, b = 2, 3
    ux, uy = QuadNum(-1, 0), QuadNum(0, 2, 2)  # 3*(cos, sin) of gamma
    A = Point.of(0, 0)
    C = Point.of(5 * a, 0)
    B = Point(ux * 5, uy * 5)
    base = quadratic(Triangle(A, C, B), 5)

    def lattice(s, t) -> Point:
        # s steps of length 1 along AC, t steps of length 1 along AB
        return Point(QuadNum(s) + ux * t / b, uy * t / b)

    rhombus_cells = {(i, j) for i in range(3) for j in range(2)}
    kept = []
    for t in base.tiles:
        # tiles of the quadratic grid inside the rhombus 0<=i<3, 0<=j<2 (units a, b)
        cx = t.centroid()
        j = cx.y / (uy / b) / b
        i = (cx.x - ux * cx.y / uy) / a
        if (int(i.rat // 1), int(j.rat // 1)) in rhombus_cells:
            continue
        kept.append(t)
    for i in range(2):
        for j in range(3):
            p00 = lattice(b * i, a * j)
            p10 = lattice(b * (i + 1), a * j)
            p01 = lattice(b * i, a * (j + 1))
            p11 = lattice(b * (i + 1), a * (j + 1))
            kept += [Triangle(p00, p10, p01), Triangle(p10, p11, p01)]
    return Tiling(base.reference, kept)


_ENTRIES: dict[str, tuple[Callable[[], Tiling], str]] = {
    "five_b": (_five_b, 'figure "Two 5-tilings", right-hand layout, mirrored'),
    "nine_nonstandard": (_nine_nonstandard, 'figure "Another 9-tiling"'),
    "twelve_b": (_twelve_b, 'figure "Two 12-tilings", prime right-hand layout'),
    "thirteen": (_thirteen, 'figure "A 13-tiling"'),
    "nonquadratic_3a2b": (_nonquadratic_3a2b, 'construction with edge relation 3a = 2b, tile a=2, b=3'),
}


def catalog_names() -> list[str]:
    return sorted(_ENTRIES)


def catalog_entry(name: str) -> CatalogEntry:
    try:
        build, prov = _ENTRIES[name]
    except KeyError:
        raise LookupError(f"unknown catalog entry {name!r}; known: {', '.join(catalog_names())}") from None
    return CatalogEntry(name, build(), prov)


def catalog(name: str) -> Tiling:
    return catalog_entry(name).tiling
