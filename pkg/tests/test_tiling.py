from __future__ import annotations

from fractions import Fraction

import pytest

from tritile.catalog import catalog
from tritile.exact import FieldMismatch, QuadNum
from tritile.generators import biquadratic, equilateral_six, hexagonal, quadratic
from tritile.geometry import Point, Triangle
from tritile.tiling import (
    Relation,
    Tiling,
    TilingError,
    compute_dmatrix,
    eigen_check,
    maximal_segments,
    relations,
    surd_sum,
    verify,
    vertex_census,
)

from helpers import GENERIC, MUTATIONS, shift_one

UNIT = Triangle.of((0, 0), (1, 0), (0, 1))


def test_quadratic_unit_triangle_verifies():
    r = verify(quadratic(UNIT, 3))
    assert r.ok and r.N == 9


def test_translated_tile_breaks_disjointness():
    t = quadratic(UNIT, 3)
    tiles = list(t.tiles)
    tiles[1] = Triangle(*(Point(p.x + Fraction(1, 100), p.y) for p in tiles[1]))
    r = verify(Tiling(t.reference, tiles))
    assert not r.disjoint_ok
    assert any("overlap" in f for f in r.failures)


def test_overlap_message_names_pair():
    t = shift_one(biquadratic(1, 2))
    r = verify(t)
    assert r.overlapping_pairs
    i, j = r.overlapping_pairs[0]
    assert f"tiles {i} and {j} overlap" in r.failures


def test_tile_outside_reference():
    t = quadratic(UNIT, 2)
    tiles = list(t.tiles)
    tiles[0] = Triangle(*(Point(p.x - 1, p.y) for p in tiles[0]))
    r = verify(Tiling(t.reference, tiles))
    assert not r.contained_ok and not r.ok


def test_mixed_radicands_rejected():
    ref = Triangle(Point.of(0, 0), Point(QuadNum(0, 1, 2), QuadNum(0)), Point(QuadNum(0), QuadNum(0, 1, 3)))
    with pytest.raises(FieldMismatch):
        verify(Tiling(ref, [ref]))


def test_empty_tiling_rejected():
    with pytest.raises(TilingError):
        Tiling(UNIT, [])


@pytest.mark.parametrize("name", sorted(MUTATIONS))
def test_mutations_on_thirteen(name):
    mutate, flag = MUTATIONS[name]
    r = verify(mutate(catalog("thirteen")))
    assert not getattr(r, flag)
    assert not r.ok


def test_census_of_biquadratic():
    c = vertex_census(biquadratic(1, 2))
    assert (c.boundary, c.nonstrict, c.strict_interior) == (3, 1, 0)
    assert c.corner_usage == (2, 2, 0)
    assert c.euler_holds(5)


def test_census_of_equilateral_six():
    c = vertex_census(equilateral_six())
    assert (c.boundary, c.nonstrict, c.strict_interior) == (3, 0, 1)


def test_dmatrix_quadratic_generic():
    for n in (1, 2, 5):
        assert compute_dmatrix(quadratic(GENERIC, n)).tolist() == [[n, 0, 0], [0, n, 0], [0, 0, n]]


def test_dmatrix_isosceles_middle_column_zero():
    d = compute_dmatrix(quadratic(UNIT, 3)).tolist()
    assert [row[1] for row in d] == [0, 0, 0]
    assert d == [[3, 0, 0], [3, 0, 0], [0, 0, 3]]
    assert [row[1] for row in compute_dmatrix(hexagonal(2)).tolist()] == [0, 0, 0]


def test_dmatrix_times_tile_sides_gives_reference_sides():
    t = biquadratic(2, 3)
    d = compute_dmatrix(t)
    sh = t.tile_shape
    sides = sorted(((a.x - b.x) ** 2 + (a.y - b.y) ** 2 for a, b in t.reference.edges()))
    for row, big in zip(d.rows, sides):
        assert surd_sum(zip(row, sh)) == surd_sum([(1, big)])


def test_relations_biquadratic():
    rel = relations(biquadratic(1, 2))
    assert [str(r) for r in rel] == ["2a - b = 0", "2α + 2β = π"]
    assert rel[0] == Relation("edge", (2, -1, 0), 0)


def test_relations_generic_quadratic_empty():
    assert relations(quadratic(GENERIC, 4)) == []


def test_maximal_segments_balance_for_quadratic():
    for seg in maximal_segments(quadratic(GENERIC, 4)):
        assert seg.imbalance() == (0, 0, 0)
    segs = maximal_segments(biquadratic(1, 2))
    assert any(any(s.imbalance()) for s in segs)
    boundary = [s for s in maximal_segments(biquadratic(1, 2), include_boundary=True) if s.boundary]
    assert len(boundary) == 3


def test_eigen_check():
    assert eigen_check(biquadratic(1, 2))
    assert eigen_check(quadratic(GENERIC, 3))
    with pytest.raises(TilingError):
        eigen_check(hexagonal(1))


def test_report_serializes():
    r = verify(biquadratic(1, 2))
    d = r.to_dict()
    assert d["ok"] and d["N"] == 5
    assert d["dmatrix"] == [[0, 0, 1], [0, 0, 2], [1, 2, 0]]
    assert d["census"]["N_b"] == 3
    assert "2a - b = 0" in r.text()
