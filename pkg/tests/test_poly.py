from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wchrom.poly import (MPoly, as_number, beta_bar, divides, from_tilde_basis, parse,
                         to_tilde_basis)

from conftest import rationals

Q, W = MPoly.var("q"), MPoly.var("w")

terms = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-5, 5)), max_size=6)


def build(ts) -> MPoly:
    return sum((c * Q**a * W**b for a, b, c in ts), MPoly())


@given(terms, terms, terms)
def test_ring_axioms(a, b, c):
    x, y, z = build(a), build(b), build(c)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x - x == MPoly()


@given(terms)
def test_print_parse_round_trip(a):
    p = build(a)
    assert parse(str(p)) == p


@given(terms, rationals, rationals)
def test_evaluate_is_a_homomorphism(a, q, w):
    p = build(a)
    assert (p * p).evaluate(q=q, w=w) == p.evaluate(q=q, w=w) ** 2


@given(terms)
def test_tilde_basis_round_trip(a):
    p = build(a)
    assert from_tilde_basis(to_tilde_basis(p)) == p


@given(terms, terms)
def test_divides_recovers_factor(a, b):
    d = build(a) + Q + 1
    p = build(b)
    ok, quot = divides(d, d * p)
    assert ok and quot == p


def test_canonical_text_is_graded_descending():
    assert str(parse("6w - 6 + q^3 + 11q - 9q*w - 6q^2 + 3q^2*w")) == \
        "q^3 + 3*q^2*w - 6*q^2 - 9*q*w + 11*q + 6*w - 6"


def test_parser_forms():
    assert parse("2(w-1)(q+1)") == 2 * (W - 1) * (Q + 1)
    assert parse("q^2 - (3 - 2w)q") == Q**2 - (3 - 2 * W) * Q
    assert parse("1/2 q") == Fraction(1, 2) * Q
    with pytest.raises(ValueError):
        parse("q +* w")


def test_coefficients_and_slices():
    p = parse("q^2 w + 3q - w^2")
    assert p.coeff("q", 2) == W
    assert p.degree("w") == 2
    s = p.slice("q", w=2)
    assert s.coeffs == [Fraction(-4), Fraction(3), Fraction(2)]


def test_beta_bar_requires_factor():
    assert beta_bar(parse("(q-1)(q+2) w"), 1) == Q + 2
    with pytest.raises(ValueError):
        beta_bar(parse("q w"), 1)


def test_as_number():
    assert as_number("3/4") == Fraction(3, 4)
    assert as_number("-2") == -2
    assert as_number(0.5) == Fraction(1, 2)
