"""Admissibility of (reference triangle, N, tile) triples.

Tiles and targets are described symbolically; no floating angles occur.
Every admissible verdict for a constructible case carries a ``Witness``
whose ``realize`` builds an actual tiling with the generators.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt

from .exact import QuadNum
from .generators import (
    biquadratic,
    bisect_isosceles,
    compose,
    equilateral_six,
    hexagonal,
    pythagorean,
    quadratic,
    triple_square,
)
from .geometry import Point, Shape, Triangle, shape_of, similar
from .numtheory import (
    factorize,
    is_k_times_square,
    is_square,
    is_sum_two_squares,
    squarefree_split,
    totient,
    totient_preimage,
    two_square_decompositions,
)
from .tiling import Tiling

__all__ = [
    "NO_WITNESS",
    "Status",
    "TargetKind",
    "TileDescriptor",
    "TileKind",
    "Verdict",
    "Witness",
    "classify",
    "classify_equilateral",
    "classify_isosceles",
    "classify_similar",
    "classify_tiling",
    "describe_target",
    "describe_tile",
    "factorize",
    "is_k_times_square",
    "is_square",
    "is_sum_two_squares",
    "realize",
    "representative",
    "squarefree_split",
    "totient",
    "totient_preimage",
    "two_square_decompositions",
]

NO_WITNESS = "no constructive witness implemented"


class TileKind(str, Enum):
    RIGHT_RATIONAL_TAN = "right-tan"
    RIGHT_306090 = "right-30-60-90"
    RIGHT_ISOSCELES = "right-isosceles"
    RIGHT_OTHER = "right-other"
    ISOSCELES_3030120 = "isosceles-30-30-120"
    EQUILATERAL = "equilateral"
    OBLIQUE_OTHER = "oblique"


class TargetKind(str, Enum):
    SIMILAR = "similar"
    EQUILATERAL = "equilateral"
    ISOSCELES_HALF = "isosceles-half"
    ISOSCELES_OTHER = "isosceles-other"
    OTHER = "other"


class Status(str, Enum):
    ADMISSIBLE = "admissible"
    INADMISSIBLE = "inadmissible"
    OUTSIDE = "outside_covered_cases"


_RIGHT = {TileKind.RIGHT_RATIONAL_TAN, TileKind.RIGHT_306090, TileKind.RIGHT_ISOSCELES, TileKind.RIGHT_OTHER}


@dataclass(frozen=True)
class TileDescriptor:
    kind: TileKind
    e: int = 0
    f: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", TileKind(self.kind))
        if self.kind is TileKind.RIGHT_RATIONAL_TAN:
            if not (0 < self.e <= self.f) or gcd(self.e, self.f) != 1:
                raise ValueError(f"tan alpha = {self.e}/{self.f} must be reduced with 0 < e <= f")
        elif self.e or self.f:
            raise ValueError(f"{self.kind.value} takes no parameters")

    @classmethod
    def right_tan(cls, e: int, f: int) -> TileDescriptor:
        """Right tile with tan(alpha) = e/f, reduced on construction."""
        if e <= 0 or f <= 0:
            raise ValueError("tangent must be positive")
        e, f = sorted((e, f))
        g = gcd(e, f)
        e, f = e // g, f // g
        if e == f:
            return cls(TileKind.RIGHT_ISOSCELES)
        return cls(TileKind.RIGHT_RATIONAL_TAN, e, f)

    @classmethod
    def parse(cls, text: str) -> TileDescriptor:
        """Parse ``right-tan E/F`` or one of the parameterless kind names."""
        parts = text.split()
        kind = TileKind(parts[0])
        if kind is TileKind.RIGHT_RATIONAL_TAN:
            if len(parts) != 2:
                raise ValueError("right-tan needs a tangent E/F")
            q = Fraction(parts[1])
            return cls.right_tan(q.numerator, q.denominator)
        if len(parts) != 1:
            raise ValueError(f"{kind.value} takes no parameters")
        return cls(kind)

    @property
    def is_right(self) -> bool:
        return self.kind in _RIGHT

    def tangent(self) -> tuple[int, int] | None:
        """(e, f) for rational tangents, counting the right isosceles tile as 1/1."""
        if self.kind is TileKind.RIGHT_RATIONAL_TAN:
            return self.e, self.f
        if self.kind is TileKind.RIGHT_ISOSCELES:
            return 1, 1
        return None

    def __str__(self) -> str:
        if self.kind is TileKind.RIGHT_RATIONAL_TAN:
            return f"{self.kind.value} {self.e}/{self.f}"
        return self.kind.value


@dataclass(frozen=True)
class Witness:
    """A generator recipe; ``family`` names the construction."""

    family: str
    tile: TileDescriptor
    params: tuple[tuple[str, int], ...] = ()
    equilateral: bool = False

    def param(self, name: str) -> int:
        return dict(self.params)[name]

    def to_dict(self) -> dict:
        return {"family": self.family, "tile": str(self.tile), "params": dict(self.params)}


@dataclass(frozen=True)
class Verdict:
    status: Status
    citations: tuple[str, ...]
    witness: Witness | None = None
    note: str = ""

    @property
    def admissible(self) -> bool:
        return self.status is Status.ADMISSIBLE

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness": self.witness.to_dict() if self.witness else None,
            "citations": list(self.citations),
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    def __str__(self) -> str:
        if self.witness is not None:
            detail = self.witness.family
        elif self.note:
            detail = self.note
        else:
            detail = ", ".join(self.citations)
        return f"{self.status.value} ({detail})"


def _yes(witness: Witness | None, *cites: str, note: str = "") -> Verdict:
    return Verdict(Status.ADMISSIBLE, cites, witness, note)


def _no(*cites: str, note: str = "") -> Verdict:
    return Verdict(Status.INADMISSIBLE, cites, None, note)


def _outside(note: str) -> Verdict:
    return Verdict(Status.OUTSIDE, (), None, note)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")


def _multiple_of_pair(n: int, e: int, f: int) -> int | None:
    """k with n = (k e)^2 + (k f)^2, if any."""
    s = e * e + f * f
    if n % s or not is_square(n // s):
        return None
    return isqrt(n // s)


def classify_similar(tile: TileDescriptor, n: int) -> Verdict:
    """The reference triangle is similar to the tile."""
    _check_n(n)
    quad = Witness("quadratic", tile, (("n", isqrt(n)),))
    kind = tile.kind
    if kind in (TileKind.RIGHT_RATIONAL_TAN, TileKind.RIGHT_ISOSCELES):
        e, f = tile.tangent()
        if is_square(n):
            return _yes(quad, "Theorem 5(i)")
        k = _multiple_of_pair(n, e, f)
        if k is not None:
            return _yes(Witness("biquadratic", tile, (("m", k * e), ("n", k * f))), "Theorem 5(i)")
        return _no("Theorem 5(i)", note=f"N is neither a square nor k^2*({e}^2 + {f}^2)")
    if kind is TileKind.RIGHT_306090:
        if is_square(n):
            return _yes(quad, "Theorem 5(ii)")
        if is_k_times_square(3, n):
            return _yes(Witness("triple-square", tile, (("m", isqrt(n // 3)),)), "Theorem 5(ii)")
        return _no("Theorem 5(ii)", note="N is neither a square nor three times a square")
    cite = {
        TileKind.RIGHT_OTHER: "Theorem 5(iii)",
        TileKind.ISOSCELES_3030120: "Theorem 7(i)",
        TileKind.EQUILATERAL: "Theorem 6",
        TileKind.OBLIQUE_OTHER: "Theorem 8",
    }[kind]
    if is_square(n):
        return _yes(quad, cite)
    return _no(cite, note="N is not a square")


def classify_equilateral(tile: TileDescriptor, n: int) -> Verdict:
    """The reference triangle is equilateral."""
    _check_n(n)
    kind = tile.kind
    if kind is TileKind.ISOSCELES_3030120:
        if is_k_times_square(3, n):
            return _yes(Witness("hexagonal", tile, (("k", isqrt(n // 3) - 1),)), "Theorem 6")
        return _no("Theorem 6", note="N is not three times a square")
    if kind is TileKind.RIGHT_306090:
        if is_k_times_square(6, n):
            return _yes(Witness("six-quadratic", tile, (("m", isqrt(n // 6)),), True), "Theorem 6", "Theorem 3(iii)")
        if is_k_times_square(2, n):
            return _yes(Witness("bisect-quadratic", tile, (("m", isqrt(n // 2)),), True), "Theorem 6", "Theorem 3(i)")
        return _no("Theorem 6", note="N is neither 6m^2 nor 2m^2")
    if kind is TileKind.EQUILATERAL:
        if is_square(n):
            return _yes(Witness("quadratic", tile, (("n", isqrt(n)),)), "Theorem 6")
        return _no("Theorem 6", note="N is not a square")
    if tile.is_right:
        return _no("Theorem 6", note="right tile other than 30-60-90: no N works")
    return _outside("equilateral target with a non-right tile of another shape")


def classify_isosceles(tile: TileDescriptor, n: int, half: bool = True) -> Verdict:
    """Non-equilateral isosceles reference; ``half`` when the tile is similar to its half."""
    _check_n(n)
    if not tile.is_right:
        if half:
            return _outside("a tile similar to half of an isosceles triangle must be right")
        return _outside("isosceles target with a non-right tile not similar to it")
    if not half:
        return _no("Theorem 7", note="right tile similar neither to the target nor to its half")
    kind = tile.kind
    if kind is TileKind.RIGHT_ISOSCELES:
        # the target is then right isosceles too
        if is_square(n):
            return _yes(Witness("quadratic", tile, (("n", isqrt(n)),)), "Theorem 7(ii)", "Theorem 3(ii)")
        if is_k_times_square(2, n):
            return _yes(Witness("bisect-quadratic", tile, (("m", isqrt(n // 2)),)), "Theorem 7(iii)", "Theorem 3(i)")
        return _no("Theorem 7", note="N is neither a square nor twice a square")
    if n % 2:
        return _no("Theorem 3", note="N must be even")
    h = n // 2
    if kind is TileKind.RIGHT_RATIONAL_TAN:
        e, f = tile.e, tile.f
        s2 = e * e + f * f
        if is_square(h):
            r = isqrt(h)
            s = isqrt(s2)
            if s * s == s2 and r % s == 0:
                k = r // s
                w = Witness("pythagorean", tile, (("p", k * e), ("q", k * f), ("r", k * s)))
            else:
                w = Witness("bisect-quadratic", tile, (("m", r),))
            return _yes(w, "Theorem 7(iii)", "Theorem 3(i)")
        if is_sum_two_squares(h):
            k = _multiple_of_pair(h, e, f)
            w = None
            if k is not None:
                w = Witness("bisect-biquadratic", tile, (("m", k * e), ("n", k * f)))
            return _yes(w, "Theorem 3(v)", "Theorem 7", note="" if w else NO_WITNESS)
        return _no("Theorem 3", "Theorem 7", note="N/2 is neither a square nor a sum of two squares")
    if kind is TileKind.RIGHT_306090:
        if is_square(h):
            return _yes(Witness("bisect-quadratic", tile, (("m", isqrt(h)),)), "Theorem 7(iii)", "Theorem 3(i)")
        if is_k_times_square(6, n):
            return _yes(Witness("bisect-triple-square", tile, (("m", isqrt(n // 6)),)), "Theorem 7(iv)", "Theorem 3(iv)")
        return _no("Theorem 7", note="N/2 is neither a square nor three times a square")
    if is_square(h):
        return _yes(Witness("bisect-quadratic", tile, (("m", isqrt(h)),)), "Theorem 7(iii)", "Theorem 3(i)")
    return _no("Theorem 7", note="N/2 is not a square")


def classify(tile: TileDescriptor, target: TargetKind | str, n: int) -> Verdict:
    target = TargetKind(target)
    if target is TargetKind.SIMILAR:
        return classify_similar(tile, n)
    if target is TargetKind.EQUILATERAL:
        return classify_equilateral(tile, n)
    if target is TargetKind.ISOSCELES_HALF:
        return classify_isosceles(tile, n, half=True)
    if target is TargetKind.ISOSCELES_OTHER:
        return classify_isosceles(tile, n, half=False)
    _check_n(n)
    if tile.is_right and tile.kind is not TileKind.RIGHT_ISOSCELES:
        return _no("Theorem 4", note="a non-isosceles right tile forces a similar or isosceles target")
    return _outside("target neither similar to the tile, isosceles nor equilateral")


# Descriptors of concrete shapes


def _rational_sqrt(q: QuadNum) -> Fraction | None:
    if not q.is_rational():
        return None
    v = Fraction(q.rat)
    num, den = isqrt(v.numerator), isqrt(v.denominator)
    if num * num == v.numerator and den * den == v.denominator:
        return Fraction(num, den)
    return None


def describe_tile(shape: Shape) -> TileDescriptor:
    a2, b2, c2 = shape
    if shape.is_right():
        if a2 == b2:
            return TileDescriptor(TileKind.RIGHT_ISOSCELES)
        if a2 * 3 == b2:
            return TileDescriptor(TileKind.RIGHT_306090)
        tan = _rational_sqrt(a2 / b2)
        if tan is not None:
            return TileDescriptor.right_tan(tan.numerator, tan.denominator)
        return TileDescriptor(TileKind.RIGHT_OTHER)
    if shape.is_equilateral():
        return TileDescriptor(TileKind.EQUILATERAL)
    if a2 == b2 and c2 == a2 * 3:
        return TileDescriptor(TileKind.ISOSCELES_3030120)
    return TileDescriptor(TileKind.OBLIQUE_OTHER)


def _half_shape(shape: Shape) -> Shape | None:
    """Shape of half of an isosceles triangle cut along its axis."""
    a2, b2, c2 = shape
    if a2 == b2:
        base2, leg2 = c2, a2
    elif b2 == c2:
        base2, leg2 = a2, c2
    else:
        return None
    q = base2 / 4
    return Shape(*sorted((q, leg2 - q, leg2)))


def describe_target(ref: Shape, tile: Shape) -> TargetKind:
    if ref.is_equilateral():
        return TargetKind.EQUILATERAL
    if similar(ref, tile):
        return TargetKind.SIMILAR
    half = _half_shape(ref)
    if half is not None:
        return TargetKind.ISOSCELES_HALF if similar(half, tile) else TargetKind.ISOSCELES_OTHER
    return TargetKind.OTHER


def classify_tiling(tiling: Tiling) -> Verdict:
    tile = tiling.tile_shape
    return classify(describe_tile(tile), describe_target(shape_of(tiling.reference), tile), tiling.N)


# Witness realization

_S2 = QuadNum(0, 1, 2)
_S3 = QuadNum(0, 1, 3)


def _legs(tile: TileDescriptor) -> tuple[QuadNum, QuadNum]:
    """Legs (short, long) of a representative right tile."""
    k = tile.kind
    if k is TileKind.RIGHT_RATIONAL_TAN:
        return QuadNum(tile.e), QuadNum(tile.f)
    if k is TileKind.RIGHT_ISOSCELES:
        return QuadNum(1), QuadNum(1)
    if k is TileKind.RIGHT_306090:
        return QuadNum(1), _S3
    return QuadNum(1), _S2


def representative(tile: TileDescriptor) -> Triangle:
    """A fixed triangle of the described shape."""
    if tile.is_right:
        u, v = _legs(tile)
        zero = QuadNum(0)
        return Triangle(Point(zero, zero), Point(v, zero), Point(v, u))
    if tile.kind is TileKind.EQUILATERAL:
        return Triangle.of((0, 0), (2, 0), (1, _S3))
    if tile.kind is TileKind.ISOSCELES_3030120:
        return Triangle.of((0, 0), (_S3 * 2, 0), (_S3, 1))
    return Triangle.of((0, 0), (7, 1), (2, 5))


def _isosceles(tile: TileDescriptor, base_half_long: bool) -> Triangle:
    """Isosceles triangle made of two mirrored copies of the representative tile."""
    u, v = _legs(tile)
    if base_half_long:
        u, v = v, u
    zero = QuadNum(0)
    return Triangle(Point(-u, zero), Point(u, zero), Point(zero, v))


def _target(w: Witness) -> Triangle:
    if w.family in ("quadratic", "biquadratic", "triple-square"):
        return representative(w.tile)
    if w.family in ("six-quadratic", "hexagonal"):
        return Triangle.of((0, 0), (2, 0), (1, _S3))
    # halves: base half is the long leg only for the 30-30-120 target
    long_base = w.tile.kind is TileKind.RIGHT_306090 and not w.equilateral
    return _isosceles(w.tile, long_base)


def _build(w: Witness) -> Tiling:
    ref = _target(w)
    fam = w.family
    if fam == "quadratic":
        return quadratic(ref, w.param("n"))
    if fam == "biquadratic":
        return biquadratic(w.param("m"), w.param("n"))
    if fam == "triple-square":
        return triple_square(w.param("m"))
    if fam == "hexagonal":
        return hexagonal(w.param("k"))
    if fam == "six-quadratic":
        return compose(quadratic(ref, w.param("m")), equilateral_six())
    if fam == "pythagorean":
        return pythagorean(w.param("p"), w.param("q"), w.param("r"))
    halves = bisect_isosceles(ref)
    half = halves.tiles[0]
    if fam == "bisect-quadratic":
        return compose(halves, quadratic(half, w.param("m")))
    if fam == "bisect-biquadratic":
        return compose(halves, biquadratic(w.param("m"), w.param("n")))
    if fam == "bisect-triple-square":
        return compose(halves, triple_square(w.param("m")))
    raise ValueError(f"unknown witness family {fam!r}")


def realize(witness: Witness, reference: Triangle | None = None) -> Tiling:
    """Build the witness tiling, optionally mapped onto a given similar reference."""
    if reference is not None and witness.family == "quadratic":
        # the representative may not share the shape of an oblique reference
        return quadratic(reference, witness.param("n"))
    t = _build(witness)
    if reference is None:
        return t
    return compose(Tiling(reference, [reference]), t)
