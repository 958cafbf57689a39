"""Independent state-sum oracle: Z as a direct sum over all q^n colorings.

Nothing here touches spanning subgraphs, so agreement with :mod:`wchrom.engine`
is a genuine cross-check.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

import numpy as np

from .config import BRUTE_BUDGET, CapExceeded
from .graph import Graph

_CHUNK = 1 << 18


def state_histogram(g: Graph, q: int, budget: int = BRUTE_BUDGET) -> np.ndarray:
    """Counts ``H[m, k]`` of colorings with ``m`` monochromatic edges and ``k`` vertices of color 1.

    Raises:
        CapExceeded: if ``q**n`` is above ``budget``.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    n = g.n
    total = q**n
    if total > budget:
        raise CapExceeded(f"state sum needs {total} colorings, above the budget {budget}")
    hist = np.zeros((g.e + 1) * (n + 1), dtype=np.int64)
    if n == 0:
        hist[0] = 1
        return hist.reshape(g.e + 1, n + 1)
    eu = np.array([u for u, _ in g.edges], dtype=np.int64)
    ev = np.array([v for _, v in g.edges], dtype=np.int64)
    powers = q ** np.arange(n, dtype=np.int64)
    for lo in range(0, total, _CHUNK):
        idx = np.arange(lo, min(total, lo + _CHUNK), dtype=np.int64)
        colors = (idx[:, None] // powers[None, :]) % q
        if g.e:
            m = (colors[:, eu] == colors[:, ev]).sum(axis=1)
        else:
            m = np.zeros(len(idx), dtype=np.int64)
        k = (colors == 0).sum(axis=1)
        hist += np.bincount(m * (n + 1) + k, minlength=hist.size)
    return hist.reshape(g.e + 1, n + 1)


def brute_force_Z(g: Graph, q: int, v, w, budget: int = BRUTE_BUDGET) -> Fraction:
    """Exact Z(G, q, v, w) = sum over colorings of prod_edges (1 + v delta) * w^(#color-1 vertices)."""
    v = Fraction(v)
    w = Fraction(w)
    h = state_histogram(g, q, budget)
    total = Fraction(0)
    for m in range(h.shape[0]):
        a = (1 + v) ** m
        if a == 0:
            continue
        for k in range(h.shape[1]):
            c = int(h[m, k])
            if c:
                total += c * a * w**k
    return total


def brute_force_ph(g: Graph, q: int, w, budget: int = BRUTE_BUDGET) -> Fraction:
    return brute_force_Z(g, q, -1, w, budget)


def count_proper_colorings(g: Graph, q: int) -> int:
    return int(brute_force_Z(g, q, -1, 1))


def chromatic_number_brute(g: Graph, limit: int = 10) -> int:
    if g.has_loop():
        raise ValueError("graph with a loop has no proper coloring")
    for q in range(1, limit + 1):
        if count_proper_colorings(g, q) > 0:
            return q
    raise ValueError("chromatic number above search limit")


def brute_force_Z_general(g: Graph, weights: Sequence, couplings: Sequence) -> Fraction:
    """Z with one field weight per color and one coupling per edge, by explicit enumeration.

    Args:
        weights: ``w_p`` for colors ``p = 1..q``; ``q = len(weights)``.
        couplings: ``v_e`` in the canonical edge order.
    """
    q = len(weights)
    if len(couplings) != g.e:
        raise ValueError("need one coupling per edge")
    if q**g.n > 10**6:
        raise CapExceeded("general state sum limited to 10^6 colorings")
    ws = [Fraction(x) for x in weights]
    vs = [Fraction(x) for x in couplings]
    total = Fraction(0)
    for colors in itertools.product(range(q), repeat=g.n):
        t = Fraction(1)
        for c in colors:
            t *= ws[c]
        for (u, v), ve in zip(g.edges, vs):
            if colors[u] == colors[v]:
                t *= 1 + ve
        total += t
    return total
