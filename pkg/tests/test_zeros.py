from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from wchrom import reference as ref
from wchrom.engine import ph
from wchrom.graph import family
from wchrom.poly import MPoly, UniSlice, parse
from wchrom.zeros import (is_real, kn_w_root, l3_q_roots, l3_w_roots, l4_w_roots, l6_w_roots,
                          locate_collision, locate_max_imag, locate_mrz_jump, match_multisets,
                          q_mrz_track, roots_q, roots_w, roots_with_fixed, scaled_residual,
                          solve_slice, w_zero_divergence_check, y5_w_roots)

Q = MPoly.var("q")

root_values = st.lists(st.integers(-6, 6), min_size=1, max_size=6)


@given(root_values)
def test_integer_roots_with_multiplicity(rs):
    p = MPoly.const(1)
    for r in rs:
        p = p * (Q - r)
    rl = solve_slice(p.slice("q"))
    got = sorted((round(z.real), m) for z, m in zip(rl.roots, rl.mult))
    want = sorted((r, rs.count(r)) for r in set(rs))
    assert got == want
    assert rl.certified()


@given(st.lists(st.fractions(-3, 3, max_denominator=5), min_size=2, max_size=7))
def test_residuals_small(coeffs):
    coeffs[-1] = coeffs[-1] or Fraction(1)
    s = UniSlice([Fraction(c) for c in coeffs], "q")
    rl = solve_slice(s)
    assert sum(rl.mult) == s.degree
    assert all(scaled_residual(s, r) < 1e-8 for r in rl.roots)


@given(st.lists(st.integers(-4, 4), min_size=3, max_size=6))
def test_real_coefficients_give_conjugate_pairs(coeffs):
    coeffs[-1] = coeffs[-1] or 1
    rl = solve_slice(UniSlice([Fraction(c) for c in coeffs], "q"))
    nonreal = [z for z in rl.expanded() if not is_real(z)]
    for z in nonreal:
        assert min(abs(z.conjugate() - y) for y in nonreal) < 1e-9


def test_square_free_multiplicities():
    rl = solve_slice(parse("(q-1)^3*(q+2)^2*(q^2+1)").slice("q"))
    assert sorted(zip([round(z.real) for z in rl.roots], rl.mult)) == \
        [(-2, 2), (0, 1), (0, 1), (1, 3)]


def test_degenerate_slice():
    rl = roots_w(ref.ph("L4"), 1)
    assert rl.degenerate and not rl.certified()


def test_extra_variables_rejected():
    with pytest.raises(ValueError):
        roots_q(parse("q + v"), 1)


@pytest.mark.parametrize("w", [-0.5, 0.3, 0.9, 2.5])
def test_l3_q_roots(w):
    rl = roots_q(ref.ph("L3"), w)
    assert match_multisets(roots_with_fixed(rl, [1]), l3_q_roots(w)) < 1e-9


@pytest.mark.parametrize("q,poly,formula", [
    (0.4, "L3", l3_w_roots), (2.6, "L4", l4_w_roots), (3.3, "L6", l6_w_roots),
    (1.8, "Y5", y5_w_roots),
])
def test_w_root_formulas(q, poly, formula):
    rl = roots_w(ref.ph(poly), q)
    assert match_multisets(rl.expanded(), formula(q)) < 1e-9


@pytest.mark.parametrize("n", [3, 5])
def test_complete_graph_w_root(n):
    rl = roots_w(ph(family(f"K:{n}")), 2.5)
    assert match_multisets(rl.expanded(), kn_w_root(n, 2.5)) < 1e-12


def test_l3_events():
    l3 = ref.ph("L3")
    w, q = locate_collision(l3, 0.5, 1.0)
    assert w == pytest.approx(0.8, abs=1e-6) and q == pytest.approx(0.8, abs=1e-6)
    w, _ = locate_max_imag(l3, 0.05, 0.79)
    assert w == pytest.approx(0.4, abs=1e-6)
    assert abs(locate_mrz_jump(l3, -0.1, 0.1, 1.5)) < 1e-6


def test_mrz_track_reports_jump():
    tr = q_mrz_track(ref.ph("L3"), np.linspace(-0.2, 0.2, 9))
    assert tr.jumps and all(a <= 0 <= b for a, b, _, _ in tr.jumps)
    assert tr.values[0] > 2 and tr.values[-1] == pytest.approx(1)


@pytest.mark.parametrize("name,q_star", [("L4", 4 / 3), ("L6", 1.5)])
def test_divergent_w_roots(name, q_star):
    rep = w_zero_divergence_check(ref.ph(name), q_star)
    assert rep.diverges and rep.sign_flip


def test_no_divergence_where_top_coefficient_survives():
    rep = w_zero_divergence_check(ref.ph("L4"), 2.6)
    assert not rep.diverges
