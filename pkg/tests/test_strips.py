from __future__ import annotations

import math
from fractions import Fraction
from math import comb

import mpmath
import pytest
from hypothesis import given, strategies as st

from wchrom import reference as ref
from wchrom.engine import ph
from wchrom.graph import sq_strip_cyclic
from wchrom.strips import (asymptotic_ratios, c_tilde, catalan, format_table, identity_check,
                           is_perfect_square, ladder_eigenvalues, ladder_transmigration_w1,
                           multiplicity_rows, n_ph_rows, n_ph_table, n_ph_total_closed, n_z,
                           n_z_row, n_zh_total, ph_ladder_exact, ph_strip_cyclic)
from wchrom.poly import MPoly

Q, W = MPoly.var("q"), MPoly.var("w")


@pytest.mark.parametrize("kind", sorted(ref.TABLES))
def test_tables_match_reference(kind):
    rows = multiplicity_rows(kind, 8)
    table, totals = ref.TABLES[kind]
    assert rows == table
    assert [sum(r) for r in rows] == totals


def test_printed_n_ph_step_does_not_reproduce_table():
    assert n_ph_rows(3, variant="as_printed") != ref.NPH_TABLE[:3]


@given(st.integers(1, 14))
def test_n_z_closed_form_matches_recursion(ly):
    assert multiplicity_rows("nz", ly)[-1] == n_z_row(ly)


@given(st.integers(2, 14))
def test_n_ph_splits_into_n_z(ly):
    row = n_ph_rows(ly)[-1]
    assert row == [n_z(ly, d) + (n_z(ly - 1, d) if d < ly else 0) for d in range(ly + 1)]


@given(st.integers(1, 14))
def test_totals(ly):
    assert sum(n_ph_rows(ly)[-1]) == n_ph_total_closed(ly)
    assert sum(n_z_row(ly)) == comb(2 * ly, ly)
    assert sum(multiplicity_rows("nzh", ly)[-1]) == n_zh_total(ly)
    assert n_z(ly, 0) == catalan(ly)


@given(st.integers(1, 9))
def test_coefficient_identity(ly):
    assert identity_check(ly)


def test_identity_detects_wrong_row():
    assert not identity_check(3, [7, 12, 6, 2])


def test_c_tilde_low_degrees():
    assert c_tilde(0) == MPoly.const(1)
    assert c_tilde(1) == Q - 2
    assert c_tilde(2) == Q**2 - 5 * Q + 5


def test_table_format():
    assert format_table([[2, 1], [3, 4, 1]]) == "1 2 1 | 3\n2 3 4 1 | 8\n"


def test_asymptotic_ratio_settles():
    r = asymptotic_ratios(4, 14)
    assert r == sorted(r)
    assert r[-1] == pytest.approx(5 / (4 * math.sqrt(math.pi)), abs=2e-3)


def test_structure_table_record():
    s = n_ph_table(3)[-1]
    assert (s.N_ph, s.N_z, s.N_zh) == (26, 20, 45)


@pytest.mark.parametrize("m", range(2, 6))
def test_ladder_exact_matches_engine(m):
    assert ph_ladder_exact(m) == ph(sq_strip_cyclic(2, m))


@pytest.mark.parametrize("q,w", [(3, 1), (1.7, 0.6), (-1.5, 2.5), (4.3, -0.7)])
def test_ladder_numeric_matches_exact(q, w):
    for m in (2, 4, 6):
        exact = float(ph_ladder_exact(m).evaluate(q=Fraction(q), w=Fraction(w)))
        num = float(ph_strip_cyclic(2, m, q, w))
        assert num == pytest.approx(exact, rel=1e-10, abs=1e-10)


def test_width_one_is_circuit():
    assert ph_strip_cyclic(1, 5) == ph(sq_strip_cyclic(1, 5))
    assert ph_strip_cyclic(1, 4, 3, 2) == ph_strip_cyclic(1, 4).evaluate(q=3, w=2)


def test_eigenvalues_at_w1():
    got, want = ladder_transmigration_w1(2.5)
    assert all(abs(a - b) < 1e-12 for a, b in zip(got, want))
    assert len(ladder_eigenvalues(3, 1)) == 8
    assert mpmath.almosteq(ladder_eigenvalues(3, 1)[(2, 1)], 1)


def test_errors():
    with pytest.raises(ValueError):
        ph_strip_cyclic(3, 4, 1, 1)
    with pytest.raises(ValueError):
        ph_strip_cyclic(2, 4)
    with pytest.raises(ValueError):
        multiplicity_rows("bogus", 3)
    assert is_perfect_square(49) and not is_perfect_square(50)
