from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wchrom.config import CapExceeded
from wchrom.engine import ph, potts_Z
from wchrom.generalized import (CouplingSpec, FieldSpec, eta, list_coloring_ph,
                                potts_Z_general, s_color_ph, s_color_Z)
from wchrom.graph import family
from wchrom.oracle import brute_force_Z_general
from wchrom.poly import MPoly

from conftest import small_graphs

Q, S, W = MPoly.var("q"), MPoly.var("s"), MPoly.var("w")


@given(small_graphs(max_e=6))
def test_s_color_with_one_weighted_color(g):
    assert s_color_Z(g).substitute(s=1) == potts_Z(g)


@given(small_graphs(max_e=6))
def test_s_color_limits(g):
    p = s_color_ph(g)
    assert p.substitute(s=0) == ph(g).substitute(w=1)
    assert p.substitute(w=1) == ph(g).substitute(w=1)


@given(small_graphs(max_n=4, max_e=5), st.lists(st.integers(-2, 3), min_size=3, max_size=3))
def test_per_color_field_matches_enumeration(g, ws):
    z = potts_Z_general(g, FieldSpec("per_color", weights=tuple(ws)), CouplingSpec(v=-1))
    assert z.const_value() == brute_force_Z_general(g, ws, [-1] * g.e)


@given(small_graphs(max_n=4, max_e=5), st.data())
def test_per_edge_couplings_match_enumeration(g, data):
    vs = data.draw(st.lists(st.fractions(-2, 2, max_denominator=3), min_size=g.e, max_size=g.e))
    z = potts_Z_general(g, FieldSpec("per_color", weights=(2, 1)),
                        CouplingSpec("per_edge", values=tuple(vs)))
    assert z.const_value() == brute_force_Z_general(g, [2, 1], vs)


def test_per_color_symbolic_is_symmetric_in_colors():
    z = potts_Z_general(family("L:3"), FieldSpec("per_color", q=3), CouplingSpec(v=-1))
    swapped = z.substitute(w_1=MPoly.var("w_2"), w_2=MPoly.var("w_1"))
    assert swapped == z


def test_eta_power_sum():
    assert eta(2, 2) == MPoly.var("w_1") ** 2 + MPoly.var("w_2") ** 2


def test_list_coloring():
    g = family("L:3")
    lists = [[1, 2], [1, 2], [1, 2]]
    assert list_coloring_ph(g, lists, weights=[1, 1]).const_value() == 2
    full = list_coloring_ph(g, [[1, 2, 3]] * 3, weights=[Fraction(1, 2), 1, 1])
    assert full.const_value() == ph(g).evaluate(q=3, w=Fraction(1, 2))
    with pytest.raises(CapExceeded):
        list_coloring_ph(family("L:8"), [[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]] * 8, budget=1000)
    with pytest.raises(ValueError):
        list_coloring_ph(g, [[1]])


def test_field_spec_validation():
    with pytest.raises(ValueError):
        FieldSpec("bogus")
    with pytest.raises(ValueError):
        FieldSpec("per_color")
    with pytest.raises(ValueError):
        FieldSpec("s_color", q=2, s=3)
