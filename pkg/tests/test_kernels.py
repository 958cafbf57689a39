from __future__ import annotations

import pytest
from hypothesis import given

from wchrom.config import CapExceeded, check_cap, enumeration_cap
from wchrom.graph import family
from wchrom.kernels import cluster_histogram, compiled_available, histogram_by_masks

from conftest import small_graphs

needs_compiled = pytest.mark.skipif(not compiled_available(), reason="compiled kernel not built")


@given(small_graphs(max_e=9, loops=True))
def test_python_matches_mask_reference(g):
    assert cluster_histogram(g, backend="python", threads=1) == histogram_by_masks(g)


@needs_compiled
@given(small_graphs(max_e=9, loops=True))
def test_compiled_matches_python(g):
    assert cluster_histogram(g, backend="compiled", threads=1) == \
        cluster_histogram(g, backend="python", threads=1)


@given(small_graphs(max_e=9))
def test_histogram_totals(g):
    h = cluster_histogram(g)
    assert sum(h.values()) == 2**g.e
    for (ne, sizes), _ in h.items():
        assert sum(sizes) == g.n and list(sizes) == sorted(sizes, reverse=True)
        assert 0 <= ne <= g.e


def test_thread_count_does_not_change_result():
    g = family("sqcyc:2x6")
    base = cluster_histogram(g, threads=1)
    assert cluster_histogram(g, threads=4) == base
    assert cluster_histogram(g, threads=3, backend="python") == base


def test_cap(monkeypatch):
    with pytest.raises(CapExceeded):
        cluster_histogram(family("K:9"), cap=20)
    monkeypatch.setenv("WCHROM_CAP", "7")
    assert enumeration_cap() == 7
    with pytest.raises(CapExceeded):
        check_cap(8)
    assert enumeration_cap(12) == 12
