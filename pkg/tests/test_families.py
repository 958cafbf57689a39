from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from wchrom import reference as ref
from wchrom.checks import named_graph
from wchrom.engine import factor_multiplicity, ph
from wchrom.families import (closed_form, coefficient_oracle, equivalence_differences,
                             observed_coefficients, ph_circuit, ph_wheel)
from wchrom.graph import family
from wchrom.poly import MPoly, divides

Q, W = MPoly.var("q"), MPoly.var("w")

KINDS = {"L": range(1, 8), "S": range(2, 8), "K": range(1, 6), "C": range(2, 9),
         "Wh": range(4, 8), "N": range(0, 5)}


@pytest.mark.parametrize("kind,n", [(k, n) for k, ns in KINDS.items() for n in ns])
def test_closed_form_matches_engine(kind, n):
    assert closed_form(kind, n) == ph(family(f"{kind}:{n}"))


@pytest.mark.parametrize("kind,n", [(k, n) for k in ("L", "S", "C", "K", "Wh")
                                    for n in range(4, 9) if not (k == "K" and n > 6)])
def test_coefficient_predictions(kind, n):
    p = closed_form(kind, n)
    assert observed_coefficients(p, n) == coefficient_oracle(kind, n)


@given(st.integers(3, 12))
def test_circuit_transfer_form(n):
    assert ph_circuit(n).substitute(w=1) == (Q - 1) ** n + (Q - 1) * (-1) ** n


@pytest.mark.parametrize("n", range(5, 10))
def test_wheel_factors(n):
    p = ph_wheel(n)
    need = [Q - 1, Q - 2] + ([Q - 3] if n % 2 == 0 else [])
    for f in need:
        assert divides(f, p)[0]
    assert factor_multiplicity(p, Q - 1) >= 1


def test_chromatically_equivalent_trees_differ_by_common_factor():
    names = ["L6", "Y6", "IsoY6", "H6", "Cr6"]
    rows = equivalence_differences([named_graph(n) for n in names])
    assert all(r["equivalent"] for r in rows)
    for r in rows:
        if r["difference"].is_zero():
            continue
        assert r["cofactor"] is not None
        key = (r["a"], r["b"]) if (r["a"], r["b"]) in ref.DIFFERENCES else None
        if key:
            assert r["difference"] == ref.difference(*key)


def test_distinct_trees_have_distinct_ph():
    polys = {n: ph(named_graph(n)) for n in ("L6", "Y6", "IsoY6", "H6", "Cr6", "S6")}
    assert len({str(p) for p in polys.values()}) == len(polys)


def test_degenerate_small_star():
    assert coefficient_oracle("S", 2)["beta_top"] == 2 * (Q - 1)
    assert closed_form("S", 1) == Q - 1 + W


def test_errors():
    with pytest.raises(ValueError):
        closed_form("H", 6)
    with pytest.raises(ValueError):
        ph_wheel(2)
