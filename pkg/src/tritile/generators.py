"""Constructors for the known tiling families, composition and rectangle flips.

Unless a reference triangle is passed in, every family puts corner A at the
origin with one side along the positive x axis.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .exact import DomainError, QuadNum, as_quad
from .geometry import Point, Triangle, orientation, shape_of, similar, sq_dist
from .tiling import Tiling

__all__ = [
    "biquadratic",
    "bisect_isosceles",
    "compose",
    "equilateral_six",
    "flippable_pairs",
    "hexagonal",
    "pythagorean",
    "quadratic",
    "rect_flip",
    "right_306090_three",
    "similarity_map",
    "triple_square",
]

SQRT3 = QuadNum(0, 1, 3)
ORIGIN = Point.of(0, 0)


def _lerp3(a: Point, b: Point, c: Point, i: int, j: int, n: int) -> Point:
    s, t = Fraction(i, n), Fraction(j, n)
    return Point(a.x + (b.x - a.x) * s + (c.x - a.x) * t, a.y + (b.y - a.y) * s + (c.y - a.y) * t)


def _quadratic_tiles(a: Point, b: Point, c: Point, n: int) -> list[Triangle]:
    P = {(i, j): _lerp3(a, b, c, i, j, n) for i in range(n + 1) for j in range(n + 1 - i)}
    tiles = []
    for j in range(n):
        for i in range(n - j):
            tiles.append(Triangle(P[i, j], P[i + 1, j], P[i, j + 1]))
            if i + j <= n - 2:
                tiles.append(Triangle(P[i + 1, j], P[i + 1, j + 1], P[i, j + 1]))
    return tiles


def quadratic(abc: Triangle, n: int) -> Tiling:
    """The n^2-tiling cut out by lines parallel to the sides."""
    if n < 1:
        raise DomainError(f"quadratic tiling needs n >= 1, got {n}")
    if orientation(*abc) == 0:
        raise DomainError("reference triangle is degenerate")
    return Tiling(abc, _quadratic_tiles(*abc, n))


def biquadratic(m: int, n: int) -> Tiling:
    """(m^2 + n^2)-tiling of a right triangle by the tile with legs m and n.

    A=(0,0), B=(m^2, mn), C=(m^2+n^2, 0); the altitude BD splits ABC into
    ABD (quadratically m-tiled) and BDC (quadratically n-tiled).
    """
    if m < 1 or n < 1:
        raise DomainError("biquadratic tiling needs m, n >= 1")
    a = ORIGIN
    b = Point.of(m * m, m * n)
    c = Point.of(m * m + n * n, 0)
    d = Point.of(m * m, 0)
    tiles = _quadratic_tiles(d, a, b, m) + _quadratic_tiles(d, c, b, n)
    return Tiling(Triangle(a, b, c), tiles)


def hexagonal(k: int) -> Tiling:
    """3(k+1)^2-tiling of an equilateral triangle by the 30-30-120 tile (sides 1, 1, sqrt 3).

    The reference is cut into the triangular lattice of side sqrt 3.  Each of
    the 1 + 2 + ... + k inward-pointing lattice triangles becomes the centre of
    a hexagon of six tiles; the remaining 3(k+1) tiles sit on the sides.
    """
    if k < 0:
        raise DomainError("hexagonal tiling needs k >= 0")

    def L(i: int, j: int) -> Point:
        return Point(SQRT3 * Fraction(2 * i + j, 2), as_quad(Fraction(3 * j, 2)))

    def centroid(*pts: Point) -> Point:
        return Point(sum((p.x for p in pts), QuadNum(0)) / 3, sum((p.y for p in pts), QuadNum(0)) / 3)

    U = {(i, j): centroid(L(i, j), L(i + 1, j), L(i, j + 1)) for j in range(k + 1) for i in range(k + 1 - j)}
    tiles = []
    for i in range(k + 1):
        tiles.append(Triangle(L(i, 0), L(i + 1, 0), U[i, 0]))
    for j in range(k + 1):
        tiles.append(Triangle(L(k + 1 - j, j), L(k - j, j + 1), U[k - j, j]))
    for j in range(k + 1):
        tiles.append(Triangle(L(0, j + 1), L(0, j), U[0, j]))
    for j in range(k):
        for i in range(k - j):
            u0, u1, u2 = U[i, j], U[i + 1, j], U[i, j + 1]
            d = centroid(L(i + 1, j), L(i + 1, j + 1), L(i, j + 1))
            tiles += [
                Triangle(d, u0, u1),
                Triangle(d, u1, u2),
                Triangle(d, u2, u0),
                Triangle(L(i + 1, j), u1, u0),
                Triangle(L(i + 1, j + 1), u2, u1),
                Triangle(L(i, j + 1), u0, u2),
            ]
    return Tiling(Triangle(L(0, 0), L(k + 1, 0), L(0, k + 1)), tiles)


def _equilateral(side) -> Triangle:
    side = as_quad(side)
    return Triangle(ORIGIN, Point(side, QuadNum(0)), Point(side / 2, side * SQRT3 / 2))


def equilateral_six(side=2) -> Tiling:
    """Six 30-60-90 tiles meeting at the centroid of an equilateral triangle."""
    if as_quad(side) <= 0:
        raise DomainError("side must be positive")
    ref = _equilateral(side)
    a, b, c = ref
    g = ref.centroid()

    def mid(p: Point, q: Point) -> Point:
        return Point((p.x + q.x) / 2, (p.y + q.y) / 2)

    mab, mbc, mca = mid(a, b), mid(b, c), mid(c, a)
    tiles = [
        Triangle(a, mab, g), Triangle(mab, b, g),
        Triangle(b, mbc, g), Triangle(mbc, c, g),
        Triangle(c, mca, g), Triangle(mca, a, g),
    ]
    return Tiling(ref, tiles)


def right_306090_three(scale=1) -> Tiling:
    """3-tiling of the 30-60-90 triangle with sides scale*(1, sqrt 3, 2).

    A=(0,0) carries the 30 degree angle, C=(2 scale, 0), right angle at B.
    """
    s = as_quad(scale)
    if s <= 0:
        raise DomainError("scale must be positive")
    a = ORIGIN
    b = Point(s / 2, s * SQRT3 / 2)
    c = Point(2 * s, QuadNum(0))
    foot = Point(s, QuadNum(0))
    inner = Point(s, s * SQRT3 / 3)
    return Tiling(Triangle(a, b, c), [Triangle(a, foot, inner), Triangle(foot, c, inner), Triangle(a, inner, b)])


def _apex(abc: Triangle) -> int | None:
    for i in range(3):
        p, q, r = abc[i], abc[(i + 1) % 3], abc[(i + 2) % 3]
        if sq_dist(p, q) == sq_dist(p, r):
            return i
    return None


def bisect_isosceles(abc: Triangle) -> Tiling:
    """Split an isosceles triangle by the altitude from its apex."""
    i = _apex(abc)
    if i is None:
        raise DomainError(f"{abc} is not isosceles")
    p, q, r = abc[i], abc[(i + 1) % 3], abc[(i + 2) % 3]
    m = Point((q.x + r.x) / 2, (q.y + r.y) / 2)
    return Tiling(abc, [Triangle(p, q, m), Triangle(p, m, r)])


def pythagorean(p: int, q: int, r: int) -> Tiling:
    """2r^2-tiling of an isosceles triangle by the right triangle with legs p, q.

    Apex (rp, rq) over base (0,0)-(2rp, 0).  The left half is quadratically
    r^2-tiled; the right half is split by its altitude and tiled with p^2 + q^2
    copies.
    """
    if min(p, q, r) < 1 or p * p + q * q != r * r:
        raise DomainError(f"({p}, {q}, {r}) is not a Pythagorean triple")
    a = ORIGIN
    apex = Point.of(r * p, r * q)
    c = Point.of(2 * r * p, 0)
    d = Point.of(r * p, 0)
    # foot of the perpendicular from d onto apex-c
    vx, vy = c.x - apex.x, c.y - apex.y
    t = ((d.x - apex.x) * vx + (d.y - apex.y) * vy) / (vx * vx + vy * vy)
    f = Point(apex.x + vx * t, apex.y + vy * t)
    tiles = _quadratic_tiles(d, a, apex, r) + _quadratic_tiles(f, d, c, p) + _quadratic_tiles(f, d, apex, q)
    return Tiling(Triangle(a, apex, c), tiles)


def similarity_map(src: Triangle, dst: Triangle):
    """A similarity (reflections allowed) taking src onto dst, as a point function."""
    r0, r1, r2 = src
    for perm in permutations(range(3)):
        t0, t1, t2 = (dst[k] for k in perm)
        base = sq_dist(r0, r1)
        lam2 = sq_dist(t0, t1) / base
        if sq_dist(t1, t2) != lam2 * sq_dist(r1, r2) or sq_dist(t2, t0) != lam2 * sq_dist(r2, r0):
            continue
        e1x, e1y = r1.x - r0.x, r1.y - r0.y
        e2x, e2y = r2.x - r0.x, r2.y - r0.y
        det = e1x * e2y - e2x * e1y
        f1 = t1 - t0
        f2 = t2 - t0

        def apply(pt: Point, t0=t0, f1=f1, f2=f2, e1x=e1x, e1y=e1y, e2x=e2x, e2y=e2y, det=det) -> Point:
            vx, vy = pt.x - r0.x, pt.y - r0.y
            s = (vx * e2y - e2x * vy) / det
            t = (e1x * vy - e1y * vx) / det
            return Point(t0.x + f1.x * s + f2.x * t, t0.y + f1.y * s + f2.y * t)

        return apply
    raise DomainError(f"{src} is not similar to {dst}")


def compose(base: Tiling, sub: Tiling) -> Tiling:
    """Replace each tile of ``base`` by a scaled, rigidly moved copy of ``sub``."""
    if not similar(shape_of(sub.reference), base.tile_shape):
        raise DomainError("sub-tiling reference is not similar to the base tile")
    tiles = []
    for t in base.tiles:
        f = similarity_map(sub.reference, t)
        tiles.extend(Triangle(f(a), f(b), f(c)) for a, b, c in sub.tiles)
    return Tiling(base.reference, tiles)


def triple_square(m: int, scale=1) -> Tiling:
    """3m^2-tiling of a 30-60-90 triangle: quadratic m-tiling, each tile 3-split."""
    three = right_306090_three(scale)
    return compose(quadratic(three.reference, m), three)


def _rectangle_pair(t1: Triangle, t2: Triangle) -> tuple[Point, Point, Point, Point] | None:
    """(h1, h2, p1, p2) if the two right triangles share a hypotenuse and form a rectangle."""
    s1, s2 = shape_of(t1), shape_of(t2)
    if not (s1.is_right() and s2.is_right()):
        return None
    shared = t1.vertex_set() & t2.vertex_set()
    if len(shared) != 2:
        return None
    h1, h2 = sorted(shared, key=lambda p: (p.x, p.y))
    if sq_dist(h1, h2) != s1.c2 or sq_dist(h1, h2) != s2.c2:
        return None
    (p1,) = t1.vertex_set() - shared
    (p2,) = t2.vertex_set() - shared
    if p1 + p2 != h1 + h2:
        return None
    return h1, h2, p1, p2


def flippable_pairs(tiling: Tiling) -> list[tuple[int, int]]:
    by_edge: dict[frozenset, list[int]] = {}
    for i, t in enumerate(tiling.tiles):
        for a, b in t.edges():
            by_edge.setdefault(frozenset((a, b)), []).append(i)
    pairs = []
    for idx in by_edge.values():
        if len(idx) == 2:
            i, j = idx
            if _rectangle_pair(tiling.tiles[i], tiling.tiles[j]):
                pairs.append((min(i, j), max(i, j)))
    return sorted(set(pairs))


def rect_flip(tiling: Tiling, i: int, j: int) -> Tiling:
    """Swap the diagonal of the rectangle formed by tiles i and j."""
    found = _rectangle_pair(tiling.tiles[i], tiling.tiles[j]) if i != j else None
    if found is None:
        raise DomainError(f"tiles {i} and {j} do not form a rectangle on a shared hypotenuse")
    h1, h2, p1, p2 = found
    tiles = list(tiling.tiles)
    tiles[i] = Triangle(h1, p1, p2)
    tiles[j] = Triangle(h2, p2, p1)
    return Tiling(tiling.reference, tiles)
