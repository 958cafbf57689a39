from __future__ import annotations

import cmath
import io
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from wchrom.spectra import (FAMILIES, _grid_eigenvalues, eigenvalues_at, labelled_eigenvalues,
                            locus_scan, phi, phi_asymptotics_check, phi_line,
                            real_axis_report, special_points, w_z)

coord = st.floats(-5, 5, allow_nan=False).map(lambda x: round(x, 3))


@given(st.sampled_from(FAMILIES), coord, coord, coord)
def test_grid_eigenvalues_match_pointwise(fam, qr, qi, w):
    q = complex(qr, qi)
    grid = _grid_eigenvalues(fam, np.array([q]), np.array([complex(w)]))[:, 0]
    assert np.allclose(grid, labelled_eigenvalues(fam, q, w), atol=1e-9)


@given(st.sampled_from(["line", "circuit", "wheel"]), coord, coord)
def test_line_pair_sum_and_product(fam, q, w):
    qq = q - (1 if fam == "wheel" else 0)
    a, b = labelled_eigenvalues(fam, q, w)[:2]
    assert abs(a + b - (qq - 2)) < 1e-9
    assert abs(a * b + (qq - 1) * w) < 1e-8 * (1 + abs(qq * w))


@given(st.sampled_from(FAMILIES), coord, coord)
def test_sorted_by_magnitude(fam, q, w):
    mags = [abs(z) for z in eigenvalues_at(fam, q, w)]
    assert mags == sorted(mags, reverse=True)


@given(coord, st.floats(0.05, 5).map(lambda x: round(x, 3)))
def test_phi_magnitude_is_largest(q, w):
    r = phi("circuit", q, w)
    assert r.abs_phi == pytest.approx(max(abs(z) for z in labelled_eigenvalues("circuit", q, w)))


def test_circuit_regions():
    assert phi("circuit", 4, 0.5).region == "R1"
    assert phi("circuit", 1.5, 0.5).region == "R2"
    assert phi("wheel", 2.5, 0.5).region == "R2"


def test_ladder_phi_takes_square_root():
    r = phi("ladder", 4, 0.5)
    top = max(abs(z) for z in labelled_eigenvalues("ladder", 4, 0.5))
    assert r.abs_phi == pytest.approx(math.sqrt(top))


def test_phi_line_branch():
    assert phi_line(3, 1) == pytest.approx(2)
    assert phi_line(4, 0) == pytest.approx(2)
    assert isinstance(phi_line(5, 0.5), float)
    assert isinstance(phi_line(1, 5), float)


def test_phi_line_is_increasing_in_q_and_w():
    qs = [2.5 + 0.5 * k for k in range(10)]
    vals = [phi_line(q, 0.5) for q in qs]
    assert vals == sorted(vals)
    ws = [0.1 * k for k in range(1, 20)]
    vals = [phi_line(3, w) for w in ws]
    assert vals == sorted(vals)


def test_series_orders():
    for c in phi_asymptotics_check():
        assert c.passed, c


def test_scan_is_thread_independent_and_conjugate_symmetric():
    a = locus_scan("circuit", "q", 0.5, (-3, 4, -3, 3), (70, 60), threads=1)
    b = locus_scan("circuit", "q", 0.5, (-3, 4, -3, 3), (70, 60), threads=4)
    assert np.array_equal(a.flagged, b.flagged)
    assert np.array_equal(a.flagged, a.flagged[::-1, :])


def test_circuit_w1_locus_is_the_unit_circle_about_1():
    s = locus_scan("circuit", "q", 1.0, (-1, 3, -2, 2), (200, 200))
    pts = s.flagged_points()
    assert len(pts) > 100
    assert np.max(np.abs(np.abs(pts - 1) - 1)) < 3 * max(s.cell)


def test_w0_locus_is_the_circle_about_2():
    s = locus_scan("circuit", "q", 0.0, (0, 4, -2, 2), (200, 200))
    pts = s.flagged_points()
    assert np.max(np.abs(np.abs(pts - 2) - 1)) < 3 * max(s.cell)


def test_csv_header():
    s = locus_scan("line", "q", 2.0, (-1, 1, -1, 1), (3, 2))
    buf = io.StringIO()
    s.write_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "re,im,dominant_index,margin,flagged"
    assert len(lines) == 7


@pytest.mark.parametrize("w", [0.0, 0.3, 0.8])
def test_circuit_axis_crossings_below_w1(w):
    rep = real_axis_report("circuit", w, -2, 5, 400)
    assert rep.crossings[-1] == pytest.approx((w + 3) / (w + 1), abs=1e-8)


def test_wheel_crossing_is_shifted():
    rep = real_axis_report("wheel", 0.5, -2, 5, 400)
    assert rep.crossings[-1] == pytest.approx(special_points("wheel", w=0.5)["q_c"], abs=1e-8)


def test_line_segment_for_large_w():
    rep = real_axis_report("line", 2.0, -6, 5, 800)
    (lo, hi), = rep.segments
    e1, e2 = 2 * (1 - 2 + math.sqrt(2)), 2 * (1 - 2 - math.sqrt(2))
    assert (lo, hi) == (pytest.approx(e2, abs=1e-8), pytest.approx(e1, abs=1e-8))


def test_special_points():
    sp = special_points("circuit", w=0.5)
    assert sp["q_c"] == pytest.approx(7 / 3)
    assert sp["q_int"] == pytest.approx(-1)
    assert special_points("circuit", w=1)["q_c"] == 2
    assert special_points("line", q=3)["w_z"] == pytest.approx(w_z(3)) == pytest.approx(-1 / 8)
    with pytest.raises(ValueError):
        special_points("ladder", w=1)
    with pytest.raises(ValueError):
        labelled_eigenvalues("torus", 1, 1)


def test_endpoints_are_discriminant_zeros():
    sp = special_points("line", w=0.3)
    for key in ("q_e1", "q_e2"):
        q = complex(sp[key])
        assert abs((q - 2) ** 2 + 4 * (q - 1) * 0.3) < 1e-12
        assert cmath.isfinite(q)
