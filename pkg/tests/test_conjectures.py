from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wchrom import reference as ref
from wchrom.checks import named_graph
from wchrom.conjectures import (alpha_slices, coefficient_zero_atlas, conjecture_sign_alternation,
                                conjecture_unimodal, is_unimodal, sign_alternation_at,
                                unimodal_at, w_grid)
from wchrom.engine import ph
from wchrom.poly import parse

GRAPHS = ("L4", "S4", "C4", "C5", "Wh5", "K4", "Y5", "H6")


@pytest.mark.parametrize("name", GRAPHS)
def test_conjectures_hold_on_grid(name):
    g = named_graph(name)
    p = ph(g)
    assert conjecture_sign_alternation(p, g.n, w_grid(11, -1, 1)).passed
    assert conjecture_unimodal(p, g.n, w_grid(11)).passed


@given(st.lists(st.integers(0, 20), max_size=8))
def test_unimodal_detector(seq):
    ok, _ = is_unimodal(seq)
    peak = seq.index(max(seq)) if seq else 0
    strict = all(a < b for a, b in zip(seq[:peak], seq[1:peak + 1])) and \
        all(a > b for a, b in zip(seq[peak:], seq[peak + 1:]))
    if strict:
        assert ok


def test_unimodal_examples():
    assert is_unimodal([1, 3, 3, 2])[0]
    assert not is_unimodal([1, 3, 2, 3])[0]
    assert not is_unimodal([1, 2, 2, 2, 1])[0]


def test_out_of_range_samples():
    p = ph(named_graph("L4"))
    assert sign_alternation_at(p, 4, 2).status == "out of range"
    assert unimodal_at(p, 4, -1).status == "out of range"


def test_failure_is_reported():
    fake = parse("q^2 + q + 1")
    rep = conjecture_sign_alternation(fake, 2, [Fraction(1, 2)])
    assert not rep.passed and rep.first_failure.w == Fraction(1, 2)


def test_alpha_slices_and_atlas():
    p = ref.ph("S4")
    sl = alpha_slices(p, 4)
    assert sl[0].coeffs == [Fraction(1)]
    atlas = coefficient_zero_atlas(p, 4)
    assert atlas[4].degree == 0
    assert any(abs(r - 1.08707) < 1e-4 for r in atlas[1].roots)
    assert any(abs(r - 1) < 1e-12 for r in atlas[0].roots)
