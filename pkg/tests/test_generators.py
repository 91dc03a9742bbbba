from __future__ import annotations

import random

import pytest

from tritile.exact import DomainError, QuadNum
from tritile.generators import (
    biquadratic,
    bisect_isosceles,
    compose,
    equilateral_six,
    flippable_pairs,
    hexagonal,
    pythagorean,
    quadratic,
    rect_flip,
    right_306090_three,
    similarity_map,
    triple_square,
)
from tritile.geometry import Point, Triangle, shape_of, similar
from tritile.tiling import verify

from helpers import GENERIC


@pytest.mark.parametrize("n", range(1, 6))
def test_quadratic(n):
    t = quadratic(GENERIC, n)
    assert t.N == n * n
    assert verify(t).ok


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 1), (2, 3), (3, 5)])
def test_biquadratic(m, n):
    t = biquadratic(m, n)
    assert t.N == m * m + n * n
    assert verify(t).ok
    assert similar(t.tile_shape, shape_of(t.reference))


@pytest.mark.parametrize("k", range(4))
def test_hexagonal(k):
    t = hexagonal(k)
    assert t.N == 3 * (k + 1) ** 2
    r = verify(t)
    assert r.ok
    assert shape_of(t.reference).is_equilateral()
    assert r.census.corner_usage == (6, 0, 0)


def test_small_families():
    assert equilateral_six().N == 6 and verify(equilateral_six(QuadNum(3))).ok
    assert right_306090_three().N == 3 and verify(right_306090_three(5)).ok
    for m in (1, 2, 3):
        t = triple_square(m)
        assert t.N == 3 * m * m and verify(t).ok


@pytest.mark.parametrize("triple", [(3, 4, 5), (4, 3, 5), (5, 12, 13)])
def test_pythagorean(triple):
    t = pythagorean(*triple)
    assert t.N == 2 * triple[2] ** 2
    assert verify(t).ok
    assert shape_of(t.reference).is_isosceles()


def test_bisect():
    t = bisect_isosceles(Triangle.of((0, 0), (4, 0), (2, 7)))
    assert t.N == 2 and verify(t).ok
    with pytest.raises(DomainError):
        bisect_isosceles(GENERIC)


def test_domain_errors():
    with pytest.raises(DomainError):
        quadratic(GENERIC, 0)
    with pytest.raises(DomainError):
        quadratic(Triangle.of((0, 0), (1, 1), (2, 2)), 2)
    with pytest.raises(DomainError):
        biquadratic(0, 2)
    with pytest.raises(DomainError):
        hexagonal(-1)
    with pytest.raises(DomainError):
        pythagorean(1, 2, 3)
    with pytest.raises(DomainError):
        compose(quadratic(GENERIC, 2), biquadratic(1, 2))


def test_similarity_map_reflection():
    src = Triangle.of((0, 0), (2, 0), (0, 1))
    dst = Triangle.of((5, 5), (5, 3), (6, 5))
    f = similarity_map(src, dst)
    assert {f(p) for p in src} == set(dst)
    assert f(Point.of(1, 0)) == Point.of(5, 4)


def test_compose_counts_and_equality():
    base = quadratic(GENERIC, 2)
    sub = quadratic(base.tiles[0], 3)
    c = compose(base, sub)
    assert c.N == 36
    assert c.same_tiles(quadratic(GENERIC, 6))
    assert verify(compose(biquadratic(1, 2), biquadratic(1, 2))).ok


def test_rect_flip_keeps_validity():
    rng = random.Random(7)
    t = biquadratic(2, 3)
    for _ in range(10):
        i, j = rng.choice(flippable_pairs(t))
        t = rect_flip(t, i, j)
        assert verify(t).ok


def test_rect_flip_rejects_non_rectangle():
    t = quadratic(GENERIC, 2)
    with pytest.raises(DomainError):
        rect_flip(t, 0, 1)
