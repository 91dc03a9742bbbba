"""Tiling data model, verification and boundary/vertex analysis."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, cmp_to_key
from typing import Iterable, Sequence

from .exact import FieldMismatch, QuadNum, normalize_sqrt, sign
from .geometry import (
    Location,
    Point,
    Shape,
    Triangle,
    area2,
    corner_label,
    interiors_overlap,
    locate,
    on_segment_interior,
    orientation,
    shape_of,
    similar,
    sq_dist,
)
from .numtheory import primitive

__all__ = [
    "DMatrix",
    "MaximalSegment",
    "Relation",
    "Report",
    "Tiling",
    "TilingError",
    "VertexCensus",
    "compute_dmatrix",
    "eigen_check",
    "maximal_segments",
    "relations",
    "verify",
    "vertex_census",
]

LABELS = "abc"
ANGLES = "αβγ"


class TilingError(ValueError):
    """A tiling fails a precondition of an analysis routine."""


@dataclass(frozen=True, eq=False)
class Tiling:
    reference: Triangle
    tiles: tuple[Triangle, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tiles", tuple(self.tiles))
        if not self.tiles:
            raise TilingError("a tiling needs at least one tile")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tiling):
            return NotImplemented
        return self.reference == other.reference and self.tiles == other.tiles

    def __hash__(self) -> int:
        return hash((self.reference, self.tiles))

    @property
    def N(self) -> int:
        return len(self.tiles)

    def __len__(self) -> int:
        return len(self.tiles)

    @cached_property
    def radicand(self) -> int:
        d = 1
        for t in (self.reference, *self.tiles):
            for p in t:
                for c in p:
                    if c.radicand != 1:
                        if d == 1:
                            d = c.radicand
                        elif c.radicand != d:
                            raise FieldMismatch(f"coordinates mix sqrt({d}) and sqrt({c.radicand})")
        return d

    @cached_property
    def tile_shape(self) -> Shape:
        return shape_of(self.tiles[0])

    def triangle_set(self) -> frozenset[frozenset[Point]]:
        return frozenset(t.vertex_set() for t in self.tiles)

    def same_tiles(self, other: Tiling) -> bool:
        return self.reference.vertex_set() == other.reference.vertex_set() and (
            Counter(t.vertex_set() for t in self.tiles) == Counter(t.vertex_set() for t in other.tiles)
        )

    @cached_property
    def _incidence(self) -> _Incidence:
        return _Incidence(self)


# ---------------------------------------------------------------------------
# bounding boxes and vertex incidence


class _Box:
    __slots__ = ("x0", "x1", "y0", "y1")

    def __init__(self, t: Triangle) -> None:
        xs = sorted(p.x for p in t)
        ys = sorted(p.y for p in t)
        self.x0, self.x1 = xs[0], xs[-1]
        self.y0, self.y1 = ys[0], ys[-1]

    def contains(self, p: Point) -> bool:
        return self.x0 <= p.x <= self.x1 and self.y0 <= p.y <= self.y1

    def apart(self, other: _Box) -> bool:
        """True iff the open boxes are disjoint."""
        return (
            self.x1 <= other.x0 or other.x1 <= self.x0
            or self.y1 <= other.y0 or other.y1 <= self.y0
        )


class _Incidence:
    """For every distinct tile vertex: which tiles touch it and how."""

    def __init__(self, tiling: Tiling) -> None:
        self.tiling = tiling
        self.ccw_tiles = [t.ccw() for t in tiling.tiles]
        self.boxes = [_Box(t) for t in tiling.tiles]
        ref = tiling.reference.ccw()
        self.ref = ref
        vertices: dict[Point, list[tuple[int, int]]] = {}
        for i, t in enumerate(self.ccw_tiles):
            for k, p in enumerate(t):
                vertices.setdefault(p, []).append((i, k))
        self.corners = vertices
        self.edge_hits: dict[Point, list[tuple[int, int]]] = {}
        self.inside_hits: dict[Point, list[int]] = {}
        self.ref_location: dict[Point, Location] = {}
        for p, inc in vertices.items():
            own = {i for i, _ in inc}
            edges, inside = [], []
            for i, (t, box) in enumerate(zip(self.ccw_tiles, self.boxes)):
                if i in own or not box.contains(p):
                    continue
                loc = locate(p, t)
                if loc is Location.INTERIOR:
                    inside.append(i)
                elif loc is Location.EDGE_INTERIOR:
                    for e, (a, b) in enumerate(t.edges()):
                        if on_segment_interior(p, a, b):
                            edges.append((i, e))
                            break
                elif loc is Location.VERTEX:  # pragma: no cover - vertex dict is complete
                    pass
            self.edge_hits[p] = edges
            self.inside_hits[p] = inside
            self.ref_location[p] = locate(p, ref)


# ---------------------------------------------------------------------------
# result types


@dataclass(frozen=True)
class VertexCensus:
    boundary: int
    nonstrict: int
    strict_interior: int
    corner_usage: tuple[int, int, int]
    corner_detail: tuple[tuple[int, int, int], ...] = ()

    def euler_holds(self, n: int) -> bool:
        return n - 1 == self.boundary + self.nonstrict + 2 * self.strict_interior

    def to_dict(self) -> dict:
        return {
            "N_b": self.boundary,
            "N_n": self.nonstrict,
            "N_s": self.strict_interior,
            "corner_usage": list(self.corner_usage),
            "corner_detail": [list(r) for r in self.corner_detail],
        }


@dataclass(frozen=True)
class DMatrix:
    rows: tuple[tuple[int, int, int], ...]
    sides: tuple[tuple[Point, Point], ...] = field(default=(), compare=False)

    def __getitem__(self, i: int) -> tuple[int, int, int]:
        return self.rows[i]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


@dataclass(frozen=True)
class Relation:
    kind: str  # "edge" or "angle"
    coefficients: tuple[int, int, int]
    target: int = 0

    def __str__(self) -> str:
        names = LABELS if self.kind == "edge" else ANGLES
        terms = []
        for c, nm in zip(self.coefficients, names):
            if not c:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            sgn = "-" if c < 0 else "+"
            terms.append((sgn, f"{mag}{nm}"))
        text = ""
        for i, (sgn, t) in enumerate(terms):
            text += (("-" if sgn == "-" else "") + t) if i == 0 else f" {sgn} {t}"
        rhs = "0" if self.kind == "edge" else _pi_multiple(self.target)
        return f"{text} = {rhs}"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "coefficients": list(self.coefficients), "target": self.target, "text": str(self)}


def _pi_multiple(k: int) -> str:
    if k == 0:
        return "0"
    if k == 1:
        return "π"
    if k == -1:
        return "-π"
    return f"{k}π"


@dataclass(frozen=True)
class MaximalSegment:
    start: Point
    end: Point
    left: tuple[int, int, int]
    right: tuple[int, int, int]
    boundary: bool = False

    def imbalance(self) -> tuple[int, int, int]:
        return tuple(l - r for l, r in zip(self.left, self.right))  # type: ignore[return-value]


@dataclass
class Report:
    N: int
    congruent_ok: bool
    disjoint_ok: bool
    contained_ok: bool
    area_ok: bool
    vertex_ok: bool
    euler_ok: bool
    census: VertexCensus | None = None
    dmatrix: DMatrix | None = None
    relations: list[Relation] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    overlapping_pairs: list[tuple[int, int]] = field(default_factory=list)

    CHECKS = ("congruent_ok", "disjoint_ok", "contained_ok", "area_ok", "vertex_ok", "euler_ok")

    @property
    def ok(self) -> bool:
        return all(getattr(self, c) for c in self.CHECKS)

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "ok": self.ok,
            **{c: getattr(self, c) for c in self.CHECKS},
            "census": self.census.to_dict() if self.census else None,
            "dmatrix": self.dmatrix.tolist() if self.dmatrix else None,
            "relations": [r.to_dict() for r in self.relations],
            "failures": list(self.failures),
        }

    def text(self) -> str:
        lines = [f"N = {self.N}"]
        for c in self.CHECKS:
            lines.append(f"  {c:<13} {'yes' if getattr(self, c) else 'NO'}")
        if self.census:
            c = self.census
            lines.append(f"  vertices: N_b={c.boundary} N_n={c.nonstrict} N_s={c.strict_interior}")
            lines.append(f"  corner usage (alpha, beta, gamma): {c.corner_usage}")
        if self.dmatrix:
            lines.append("  d-matrix: " + str(self.dmatrix.tolist()))
        for r in self.relations:
            lines.append(f"  {r.kind} relation: {r}")
        for f in self.failures:
            lines.append(f"  FAIL: {f}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# verification


def _overlapping_pairs(tiling: Tiling, inc: _Incidence, limit: int | None = None) -> list[tuple[int, int]]:
    boxes = inc.boxes
    order = sorted(range(tiling.N), key=lambda i: boxes[i].x0)
    found = []
    for pos, i in enumerate(order):
        bi = boxes[i]
        for j in order[pos + 1:]:
            bj = boxes[j]
            if bj.x0 >= bi.x1:
                break
            if bi.apart(bj):
                continue
            if interiors_overlap(inc.ccw_tiles[i], inc.ccw_tiles[j]):
                found.append((min(i, j), max(i, j)))
                if limit is not None and len(found) >= limit:
                    return sorted(found)
    return sorted(found)


def _direction_cmp(u: Point, v: Point) -> int:
    hu = 0 if sign(u.y) > 0 or (sign(u.y) == 0 and sign(u.x) > 0) else 1
    hv = 0 if sign(v.y) > 0 or (sign(v.y) == 0 and sign(v.x) > 0) else 1
    if hu != hv:
        return hu - hv
    c = sign(u.x * v.y - u.y * v.x)
    return -c


def _same_direction(u: Point, v: Point) -> bool:
    return sign(u.x * v.y - u.y * v.x) == 0 and sign(u.x * v.x + u.y * v.y) > 0


def _wedges_cover_turn(wedges: list[tuple[Point, Point]]) -> bool:
    """Do ccw wedges (start, end) tile the full turn without overlap?"""
    if len(wedges) < 2:
        return False
    ws = sorted(wedges, key=cmp_to_key(lambda a, b: _direction_cmp(a[0], b[0])))
    for k in range(len(ws)):
        nxt = ws[(k + 1) % len(ws)]
        if _direction_cmp(ws[k][0], nxt[0]) == 0:
            return False
        if not _same_direction(ws[k][1], nxt[0]):
            return False
    return True


def _vertex_wedges(inc: _Incidence, p: Point) -> list[tuple[Point, Point]] | None:
    if inc.inside_hits[p]:
        return None
    wedges = []
    for i, k in inc.corners[p]:
        t = inc.ccw_tiles[i]
        wedges.append((t[(k + 1) % 3] - p, t[(k + 2) % 3] - p))
    for i, e in inc.edge_hits[p]:
        a, b = inc.ccw_tiles[i].edges()[e]
        wedges.append((b - p, a - p))
    loc = inc.ref_location[p]
    ref = inc.ref
    if loc is Location.OUTSIDE:
        return None
    if loc is Location.VERTEX:
        k = list(ref).index(p)
        wedges.append((ref[(k + 2) % 3] - p, ref[(k + 1) % 3] - p))
    elif loc is Location.EDGE_INTERIOR:
        for a, b in ref.edges():
            if on_segment_interior(p, a, b):
                wedges.append((a - p, b - p))
                break
    return wedges


def verify(tiling: Tiling, max_failures: int = 20) -> Report:
    """Run every tiling check and collect the analysis results."""
    tiling.radicand  # raises FieldMismatch on mixed fields
    failures: list[str] = []
    n = tiling.N

    congruent_ok = True
    shapes = []
    for i, t in enumerate(tiling.tiles):
        try:
            shapes.append(shape_of(t))
        except ValueError:
            shapes.append(None)
            congruent_ok = False
            failures.append(f"tile {i} is degenerate")
    if congruent_ok:
        for i, s in enumerate(shapes[1:], start=1):
            if s != shapes[0]:
                congruent_ok = False
                failures.append(f"tile {i} is not congruent to tile 0")
                if len(failures) >= max_failures:
                    break
    if not congruent_ok:
        return Report(n, False, False, False, False, False, False, failures=failures)

    inc = tiling._incidence
    pairs = _overlapping_pairs(tiling, inc, limit=max_failures)
    disjoint_ok = not pairs
    for i, j in pairs:
        failures.append(f"tiles {i} and {j} overlap")

    contained_ok = True
    for p, loc in inc.ref_location.items():
        if loc is Location.OUTSIDE:
            contained_ok = False
            failures.append(f"vertex {p} lies outside the reference triangle")

    total = sum((area2(t) for t in tiling.tiles), QuadNum(0))
    area_ok = total == area2(tiling.reference)
    if not area_ok:
        failures.append(f"tile areas sum to {total}/2, reference area is {area2(tiling.reference)}/2")

    vertex_ok = True
    for p in inc.corners:
        wedges = _vertex_wedges(inc, p)
        if wedges is None or not _wedges_cover_turn(wedges):
            vertex_ok = False
            if len(failures) < max_failures:
                failures.append(f"corner wedges at {p} do not close up")
    for q in tiling.reference:
        if q not in inc.corners:
            vertex_ok = False
            failures.append(f"reference corner {q} is not a tile vertex")

    census = vertex_census(tiling)
    euler_ok = census.euler_holds(n)
    if not euler_ok:
        failures.append(
            f"Euler equation fails: N-1={n - 1}, N_b + N_n + 2N_s = "
            f"{census.boundary + census.nonstrict + 2 * census.strict_interior}"
        )

    report = Report(
        n, congruent_ok, disjoint_ok, contained_ok, area_ok, vertex_ok, euler_ok,
        census=census, failures=failures, overlapping_pairs=pairs,
    )
    if report.ok:
        try:
            report.dmatrix = compute_dmatrix(tiling)
            report.relations = relations(tiling)
        except TilingError as exc:
            failures.append(str(exc))
    return report


# ---------------------------------------------------------------------------
# analysis


def vertex_census(tiling: Tiling) -> VertexCensus:
    inc = tiling._incidence
    shape = tiling.tile_shape
    corners = set(tiling.reference)
    nb = nn = ns = 0
    for p in inc.corners:
        if p in corners:
            continue
        loc = inc.ref_location[p]
        if loc is Location.EDGE_INTERIOR:
            nb += 1
        elif loc is Location.INTERIOR:
            if inc.edge_hits[p]:
                nn += 1
            else:
                ns += 1
    detail = []
    for q in tiling.reference:
        counts = [0, 0, 0]
        for i, k in inc.corners.get(q, ()):
            counts[corner_label(inc.ccw_tiles[i], k, shape)] += 1
        detail.append(tuple(counts))
    usage = tuple(sum(r[j] for r in detail) for j in range(3))
    return VertexCensus(nb, nn, ns, usage, tuple(detail))  # type: ignore[arg-type]


def _point_key(p: Point) -> tuple:
    return (p.x, p.y)


def _sorted_sides(ref: Triangle) -> list[tuple[Point, Point]]:
    sides = []
    for a, b in ref.edges():
        lo, hi = sorted((a, b), key=_point_key)
        sides.append((sq_dist(a, b), _point_key(lo), _point_key(hi), (lo, hi)))
    sides.sort(key=lambda s: s[:3])
    return [s[3] for s in sides]


def compute_dmatrix(tiling: Tiling) -> DMatrix:
    """Count a/b/c tile edges along each reference side, shortest side first."""
    shape = tiling.tile_shape
    rows = []
    sides = _sorted_sides(tiling.reference)
    for a, b in sides:
        counts = [0, 0, 0]
        for t in tiling.tiles:
            for p, q in t.edges():
                if orientation(a, b, p) or orientation(a, b, q):
                    continue
                if not (_on_closed(p, a, b) and _on_closed(q, a, b)):
                    continue
                lab = shape.label(sq_dist(p, q))
                if lab is None:
                    raise TilingError(f"boundary edge {p}-{q} matches no tile side")
                counts[lab] += 1
        rows.append(tuple(counts))
    return DMatrix(tuple(rows), tuple(sides))  # type: ignore[arg-type]


def _on_closed(p: Point, a: Point, b: Point) -> bool:
    return p == a or p == b or on_segment_interior(p, a, b)


def _line_key(p: Point, q: Point) -> tuple[QuadNum, QuadNum, QuadNum]:
    na = q.y - p.y
    nb = p.x - q.x
    k = na if na else nb
    na, nb = na / k, nb / k
    return (na, nb, na * p.x + nb * p.y)


def maximal_segments(tiling: Tiling, include_boundary: bool = False) -> list[MaximalSegment]:
    """Merge collinear tile edges into maximal segments.

    ``left``/``right`` count the a/b/c tile edges abutting each side.
    """
    shape = tiling.tile_shape
    groups: dict[tuple, list] = {}
    for t in tiling.tiles:
        for k, (p, q) in enumerate(t.edges()):
            key = _line_key(p, q)
            na, nb, c = key
            w = t[(k + 2) % 3]
            side = sign(na * w.x + nb * w.y - c)
            u = Point(-nb, na)
            tp, tq = u.x * p.x + u.y * p.y, u.x * q.x + u.y * q.y
            if tq < tp:
                p, q, tp, tq = q, p, tq, tp
            lab = shape.label(sq_dist(p, q))
            if lab is None:
                raise TilingError(f"edge {p}-{q} matches no tile side")
            groups.setdefault(key, []).append((tp, tq, p, q, side, lab))
    ref_keys = {_line_key(a, b) for a, b in tiling.reference.edges()}
    out = []
    for key, edges in groups.items():
        boundary = key in ref_keys
        if boundary and not include_boundary:
            continue
        edges.sort(key=lambda e: e[0])
        cur = None
        for tp, tq, p, q, side, lab in edges:
            if cur is None or tp > cur["hi"]:
                if cur is not None:
                    out.append(_finish(cur, boundary))
                cur = {"lo": tp, "hi": tq, "start": p, "end": q, "L": [0, 0, 0], "R": [0, 0, 0]}
            elif tq > cur["hi"]:
                cur["hi"], cur["end"] = tq, q
            (cur["R"] if side > 0 else cur["L"])[lab] += 1
        out.append(_finish(cur, boundary))
    return out


def _finish(cur: dict, boundary: bool) -> MaximalSegment:
    return MaximalSegment(cur["start"], cur["end"], tuple(cur["L"]), tuple(cur["R"]), boundary)  # type: ignore[arg-type]


def _angle_relation(counts: Sequence[int], k: int, shape: Shape) -> Relation | None:
    p, q, r = counts
    if shape.is_equilateral():
        return None
    if shape.a2 == shape.b2:
        # alpha == beta, gamma = pi - 2 alpha
        coeffs, tgt = (p + q - 2 * r, 0, 0), k - r
    elif shape.b2 == shape.c2:
        # beta == gamma, alpha = pi - 2 gamma
        coeffs, tgt = (0, 0, q + r - 2 * p), k - p
    else:
        # gamma = pi - alpha - beta
        coeffs, tgt = (p - r, q - r, 0), k - r
    if not any(coeffs):
        if tgt:
            raise TilingError(f"impossible angle sum {counts} at a {k}π vertex")
        return None
    red = primitive((*coeffs, tgt))
    return Relation("angle", red[:3], red[3])  # type: ignore[arg-type]


def relations(tiling: Tiling) -> list[Relation]:
    """Edge relations from unbalanced maximal segments, then angle relations."""
    out: list[Relation] = []
    seen = set()
    for seg in maximal_segments(tiling):
        diff = seg.imbalance()
        if any(diff):
            rel = Relation("edge", primitive(diff))  # type: ignore[arg-type]
            if rel not in seen:
                seen.add(rel)
                out.append(rel)
    inc = tiling._incidence
    shape = tiling.tile_shape
    corners = set(tiling.reference)
    for p, incs in inc.corners.items():
        if p in corners:
            continue
        strict_interior = inc.ref_location[p] is Location.INTERIOR and not inc.edge_hits[p]
        counts = [0, 0, 0]
        for i, k in incs:
            counts[corner_label(inc.ccw_tiles[i], k, shape)] += 1
        rel = _angle_relation(counts, 2 if strict_interior else 1, shape)
        if rel is not None and rel not in seen:
            seen.add(rel)
            out.append(rel)
    return out


# ---------------------------------------------------------------------------
# eigenvalue relation


def _surd_terms(q: QuadNum, mult: int | Fraction = 1) -> tuple[int, Fraction]:
    """sqrt(q) as (radicand, coefficient)."""
    root = normalize_sqrt(q)
    if root.irr:
        return root.radicand, root.irr * mult
    return 1, root.rat * mult


def surd_sum(terms: Iterable[tuple[int | Fraction, QuadNum]]) -> dict[int, Fraction]:
    """Sum of k_i * sqrt(q_i), grouped by square-free radicand."""
    acc: dict[int, Fraction] = {}
    for k, q in terms:
        d, c = _surd_terms(q, k)
        acc[d] = acc.get(d, Fraction(0)) + c
    return {d: c for d, c in acc.items() if c}


def eigen_check(tiling: Tiling) -> bool:
    """d * (a, b, c) == (X, Y, Z) == sqrt(N) * (a, b, c), exactly."""
    shape = tiling.tile_shape
    ref_sides = _sorted_sides(tiling.reference)
    ref_shape = Shape(*(sq_dist(a, b) for a, b in ref_sides))
    if not similar(shape, ref_shape):
        raise TilingError("eigen_check needs a tile similar to the reference triangle")
    d = compute_dmatrix(tiling)
    tile_sides = (shape.a2, shape.b2, shape.c2)
    n = tiling.N
    for row, big in zip(d.rows, ref_shape):
        lhs = surd_sum(zip(row, tile_sides))
        if lhs != surd_sum([(1, big)]):
            return False
    root_n = normalize_sqrt(n)
    for small, big in zip(tile_sides, ref_shape):
        # sqrt(N) * sqrt(small) == sqrt(big)  <=>  N * small == big, both sides >= 0
        if root_n * root_n * small != big:
            return False
    return True
