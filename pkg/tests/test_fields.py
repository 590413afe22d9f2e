"""Exact scalar arithmetic over Q and GF(p)."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from evoalg.errors import (DivisionByZero, FieldMismatch, NonPrimeModulus,
                           ParseError)
from evoalg.fields import (GF, QQ, Mod, is_prime, parse_field, render_field)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}
    for n in range(-2, 42):
        assert is_prime(n) == (n in primes)


def test_is_prime_large():
    assert is_prime(2**31 - 1)
    assert not is_prime(2**31)
    # Carmichael number: composite that fools Fermat tests.
    assert not is_prime(561)


def test_mod_arithmetic():
    F = GF(7)
    a, b = F(3), F(5)
    assert a + b == F(1)
    assert a - b == F(5)
    assert a * b == F(1)
    assert -a == F(4)
    assert a / b == a * b.inverse()
    assert b.inverse() * b == F.one
    assert 2 + a == F(5) and 2 * a == F(6) and 2 - a == F(6)
    assert a ** 6 == F.one


def test_mod_errors():
    with pytest.raises(DivisionByZero):
        GF(5)(0).inverse()
    with pytest.raises(FieldMismatch):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatch):
        GF(5)(1) + Fraction(1)
    with pytest.raises(NonPrimeModulus):
        GF(6)
    with pytest.raises(FieldMismatch):
        QQ(Mod(1, 5))
    with pytest.raises(FieldMismatch):
        GF(5)(Fraction(1, 2))


def test_rational_canonical():
    assert QQ(6, 4) == Fraction(3, 2)
    assert QQ.parse("-3/6") == Fraction(-1, 2)
    assert QQ.render(Fraction(-1, 2)) == "-1/2"
    assert QQ.parse("  7 ") == 7
    with pytest.raises(ParseError):
        QQ.parse("1/0")
    with pytest.raises(ParseError):
        QQ.parse("0.5")


def test_rational_sqrt():
    assert QQ.sqrt(Fraction(4, 9)) == Fraction(2, 3)
    assert QQ.sqrt(Fraction(0)) == 0
    assert QQ.sqrt(Fraction(2)) is None
    assert QQ.sqrt(Fraction(-4)) is None
    r = QQ.sqrt(Fraction(49, 121))
    assert r == Fraction(7, 11) and r >= 0


def test_gf_sqrt_smaller_residue():
    F = GF(7)
    # 3*3 = 2 and 4*4 = 2; the smaller residue wins.
    assert F.sqrt(F(2)) == F(3)
    assert F.sqrt(F(0)) == F(0)
    assert F.sqrt(F(3)) is None
    F13 = GF(13)
    for a in range(13):
        r = F13.sqrt(F13(a))
        if r is not None:
            assert r * r == F13(a)
            assert r.r <= (13 - r.r) % 13 or a == 0
    # p = 2: every element is its own square root.
    assert GF(2).sqrt(GF(2)(1)) == GF(2)(1)


def test_gf_sqrt_tonelli_branch():
    # p % 4 == 1 exercises the full Tonelli-Shanks loop.
    F = GF(17)
    squares = {(x * x) % 17 for x in range(1, 17)}
    for a in range(1, 17):
        r = F.sqrt(F(a))
        if a in squares:
            assert r * r == F(a) and r.r == min(r.r, 17 - r.r)
        else:
            assert r is None


def test_parse_render_field():
    assert parse_field("q") is QQ
    assert parse_field("GF 11") == GF(11)
    assert parse_field("gf(7)") == GF(7)
    assert render_field(QQ) == "q"
    assert render_field(GF(5)) == "gf 5"
    with pytest.raises(ParseError):
        parse_field("r")


@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40))
def test_gf5_ring_axioms(x, y, z):
    F = GF(5)
    a, b, c = F(x), F(y), F(z)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a + F.zero == a and a * F.one == a
    if b:
        assert (a / b) * b == a


@given(st.fractions(max_denominator=30), st.fractions(max_denominator=30))
def test_rational_field_ops(x, y):
    a, b = QQ(x), QQ(y)
    assert a + b - b == a
    if b != 0:
        assert (a / b) * b == a
    assert QQ.parse(QQ.render(a)) == a
