from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tritile.exact import DomainError, FieldMismatch, QuadNum, arith, normalize_sqrt, parse_number, sign

from conftest import approx_float, quads, small_fracs


def test_normalize_examples():
    assert normalize_sqrt(Fraction(9, 4)) == QuadNum(Fraction(3, 2))
    assert str(normalize_sqrt(12)) == "0+2*sqrt(3)"
    assert normalize_sqrt(Fraction(1, 2)) == QuadNum(0, Fraction(1, 2), 2)
    assert normalize_sqrt(0) == 0
    with pytest.raises(DomainError):
        normalize_sqrt(-1)


def test_arith_examples():
    a = QuadNum(1, 1, 3)
    b = QuadNum(1, -1, 3)
    assert a * b == -2
    assert arith(1, QuadNum(2, 1, 3), "div") == QuadNum(2, -1, 3)
    assert str(arith(1, QuadNum(2, 1, 3), "div")) == "2-1*sqrt(3)"
    assert sign(QuadNum(7, -4, 3)) == 1
    assert sign(QuadNum(-7, 4, 3)) == -1


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        QuadNum(0, 1, 2) + QuadNum(0, 1, 3)
    # a rational number mixes with any field
    assert QuadNum(0, 1, 2) + QuadNum(3, 0, 3) == QuadNum(3, 1, 2)


def test_radicand_reduction():
    assert QuadNum(0, 1, 12) == QuadNum(0, 2, 3)
    assert QuadNum(1, 1, 9) == 4
    assert QuadNum(5, 0, 7).radicand == 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QuadNum(1, 1, 2) / QuadNum(0)


@pytest.mark.parametrize("text", ["3", "-7/4", "0+2*sqrt(3)", "1/2-3/5*sqrt(7)", "-1+1*sqrt(2)"])
def test_parse_roundtrip(text):
    assert str(parse_number(text)) == text


@pytest.mark.parametrize("text", ["", "1.5", "sqrt(2)", "1+sqrt(2)", "1/0", "2*sqrt(3)"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_number(text)


@given(quads(3), quads(3), quads(3))
def test_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0


@given(quads(5), quads(5))
def test_division_inverts_multiplication(x, y):
    if y:
        assert (x / y) * y == x


@given(quads())
def test_sign_matches_float(x):
    f = approx_float(x)
    if abs(f) > 1e-9:
        assert sign(x) == (1 if f > 0 else -1)
    if sign(x) == 0:
        assert x == 0


@given(quads(2), quads(2))
def test_order_is_total_and_consistent(x, y):
    assert (x < y) + (x == y) + (x > y) == 1
    assert (x < y) == (sign(y - x) == 1)


@given(quads())
def test_text_roundtrip(x):
    assert parse_number(str(x)) == x
    assert str(parse_number(str(x))) == str(x)


@settings(max_examples=200)
@given(st.fractions(min_value=0, max_value=500, max_denominator=50))
def test_sqrt_squares_back(q):
    r = normalize_sqrt(q)
    assert r * r == q
    assert sign(r) >= 0


@given(small_fracs, small_fracs)
def test_rational_arith_matches_fraction(a, b):
    assert arith(a, b, "add") == a + b
    assert arith(a, b, "mul") == a * b
    if b:
        assert arith(a, b, "div") == a / b
