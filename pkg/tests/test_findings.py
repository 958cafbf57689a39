"""Behaviour that differs from commonly quoted closed forms, pinned down by computation."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from wchrom import reference as ref
from wchrom.families import ph_line
from wchrom.spectra import locus_scan, phi, phi_line, real_axis_report, special_points
from wchrom.strips import n_ph_rows
from wchrom.zeros import isoy6_w_roots, match_multisets, roots_w

QS = (-0.7, 0.4, 1.2, 2.6, 3.3)


@pytest.mark.parametrize("q", QS)
def test_double_root_formula_describes_h6(q):
    got = roots_w(ref.ph("H6"), q).expanded()
    assert match_multisets(got, isoy6_w_roots(q) + [complex(2 - q)]) < 1e-9


@pytest.mark.parametrize("q", QS)
def test_isoy6_has_a_simple_root_at_2_minus_q(q):
    rl = roots_w(ref.ph("IsoY6"), q)
    assert ref.ph("IsoY6").degree("w") == 3
    k = min(range(len(rl.roots)), key=lambda i: abs(rl.roots[i] - (2 - q)))
    assert abs(rl.roots[k] - (2 - q)) < 1e-9 and rl.mult[k] == 1


@pytest.mark.parametrize("w", [0.2, 0.5, 0.8, 1.5])
def test_full_wheel_crossing_is_three(w):
    rep = real_axis_report("wheel_full", w, -2, 5, 400)
    assert rep.crossings[-1] == pytest.approx(3, abs=1e-8)
    assert special_points("wheel_full", w=w)["q_c"] == 3


def test_wheel_without_hub_eigenvalue_crossing():
    w = 0.5
    assert special_points("wheel", w=w)["q_c"] == pytest.approx(2 * (w + 2) / (w + 1))


def test_line_limit_inside_unit_disc_about_1():
    r = phi("line", 1.5, 0.5)
    assert r.dominant_label == "lambda_102"
    assert r.abs_phi > abs(phi_line(1.5, 0.5))
    a, b = (ph_line(n).evaluate(q=Fraction(3, 2), w=Fraction(1, 2)) for n in (20, 21))
    assert float(b / a) == pytest.approx(r.phi.real, rel=1e-5)


def test_line_locus_for_large_w_contains_circle():
    s = locus_scan("line", "q", 2.0, (-6, 5, -3, 3), (400, 400))
    pts = s.flagged_points()
    off_axis = pts[np.abs(pts.imag) > 0.05]
    assert len(off_axis) > 100
    assert np.max(np.abs(np.abs(off_axis - 1) - 1)) < 3 * max(s.cell)


def test_printed_multiplicity_step_overcounts():
    assert n_ph_rows(2, variant="as_printed")[1][1] == 5
    assert n_ph_rows(2)[1] == [3, 4, 1]
