from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wchrom import reference as ref
from wchrom.checks import named_graph
from wchrom.engine import (check_zt, chromatic, chromatic_number, delta_ph, ph, potts_Z,
                           tutte, u_eval)
from wchrom.graph import Graph, disjoint_union, family
from wchrom.poly import MPoly, parse

from conftest import small_graphs

Q, W = MPoly.var("q"), MPoly.var("w")


@given(small_graphs())
def test_ph_at_w1_is_chromatic(g):
    assert ph(g).substitute(w=1) == chromatic(g)


@given(small_graphs())
def test_ph_at_w0_counts_colorings_avoiding_one_color(g):
    assert ph(g).substitute(w=0) == chromatic(g).substitute(q=Q - 1)


@given(small_graphs(max_e=7))
def test_z_reduces_to_tutte(g):
    assert check_zt(g)


@given(small_graphs(max_n=4), small_graphs(max_n=4))
def test_disjoint_union_multiplies(a, b):
    assert ph(disjoint_union(a, b)) == ph(a) * ph(b)


@given(small_graphs(max_e=6))
def test_multiedges_do_not_change_ph(g):
    if g.e:
        doubled = Graph(g.n, g.edges + g.edges[:1])
        assert ph(doubled) == ph(g)


def test_loop_kills_ph():
    assert ph(Graph(2, ((0, 0), (0, 1)))) == MPoly()


def test_leading_terms():
    p = ph(family("C:5"))
    assert p.coeff("q", 5) == MPoly.const(1)
    assert p.coeff("q", 4) == 5 * W - 10


def test_golden_examples():
    for name in ("L3", "C3", "C4", "Wh5", "S4"):
        assert ph(named_graph(name)) == ref.ph(name)


def test_deletion_contraction_fails_by_a_w_multiple():
    d = delta_ph(family("C:4"), 0)
    assert not d.is_zero()
    assert d.substitute(w=1).is_zero()


def test_chromatic_number():
    assert chromatic_number(family("C:5")) == 3
    assert chromatic_number(family("K:4")) == 4
    assert chromatic_number(family("N:3")) == 1


def test_tutte_of_triangle():
    assert tutte(family("C:3")) == parse("x^2 + x + y")


def test_u_eval_poles_and_value():
    g = family("L:3")
    with pytest.raises(ZeroDivisionError):
        u_eval(g, 1, 2, 1)
    assert u_eval(g, 2, 3, Fraction(1, 2)) == u_eval(g, "2", "3", Fraction(1, 2))


@given(st.integers(1, 4))
def test_potts_z_at_v_minus_one(n):
    g = family(f"C:{n + 1}")
    assert potts_Z(g).substitute(v=-1) == ph(g)
