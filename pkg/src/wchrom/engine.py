"""Partition functions and weighted chromatic polynomials from spanning-subgraph sums.

Every quantity here is a linear functional of the cluster histogram from
:mod:`wchrom.kernels`: a subgraph with ``ne`` edges and component sizes
``n_1, ..., n_k`` contributes ``v**ne * prod_i (q - 1 + w**n_i)`` to ``Z``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .graph import Graph, contract_edge, delete_edge, reduce_multiedges
from .kernels import Histogram, cluster_histogram
from .poly import MPoly, divides, parse

Q, V, W, X, Y = (MPoly.var(s) for s in "qvwxy")


def histogram(g: Graph, **opts) -> Histogram:
    """Cluster histogram; ``opts`` are forwarded to :func:`cluster_histogram`."""
    return cluster_histogram(g, **opts)


def _product(sizes: tuple[int, ...], factor: Callable[[int], MPoly]) -> MPoly:
    out = MPoly.const(1)
    counts: dict[int, int] = {}
    for s in sizes:
        counts[s] = counts.get(s, 0) + 1
    for s, k in sorted(counts.items()):
        out = out * factor(s) ** k
    return out


@lru_cache(maxsize=None)
def _wu_factor(s: int) -> MPoly:
    return Q - 1 + W**s


def fold(hist: Histogram, factor: Callable[[int], MPoly], edge_weight: Callable[[int], MPoly]
         ) -> MPoly:
    """Sum ``edge_weight(ne) * prod factor(size)`` over a histogram.

    Counts sharing a size profile are combined first so each product is formed once.
    """
    by_sizes: dict[tuple[int, ...], dict[int, int]] = {}
    for (ne, sizes), c in hist.items():
        row = by_sizes.setdefault(sizes, {})
        row[ne] = row.get(ne, 0) + c
    total = MPoly()
    weights: dict[int, MPoly] = {}
    for sizes in sorted(by_sizes):
        row = by_sizes[sizes]
        coef = MPoly()
        for ne, c in sorted(row.items()):
            if ne not in weights:
                weights[ne] = edge_weight(ne)
            coef = coef + weights[ne] * c
        if not coef.is_zero():
            total = total + coef * _product(sizes, factor)
    return total


def potts_Z(g: Graph, **opts) -> MPoly:
    """Z(G, q, v, w) as an exact polynomial in ``q, v, w``."""
    return fold(histogram(g, **opts), _wu_factor, lambda ne: V**ne)


def _ph_from_hist(hist: Histogram) -> MPoly:
    by_sizes: dict[tuple[int, ...], int] = {}
    for (ne, sizes), c in hist.items():
        by_sizes[sizes] = by_sizes.get(sizes, 0) + (-c if ne & 1 else c)
    total = MPoly()
    for sizes in sorted(by_sizes):
        c = by_sizes[sizes]
        if c:
            total = total + _product(sizes, _wu_factor) * c
    return total


def ph(g: Graph, *, simplify: bool = True, **opts) -> MPoly:
    """Weighted chromatic polynomial Ph(G, q, w) = Z(G, q, -1, w).

    With ``simplify`` (the default) a graph with a loop returns zero directly and
    parallel edges are merged before enumerating, both of which leave Ph
    unchanged. Pass ``simplify=False`` to sum over the multigraph as given.
    """
    if simplify:
        if g.has_loop():
            return MPoly()
        g = reduce_multiedges(g)
    return _ph_from_hist(histogram(g, **opts))


def chromatic(g: Graph, **opts) -> MPoly:
    """Ordinary chromatic polynomial P(G, q) = Ph(G, q, 1)."""
    return ph(g, **opts).substitute(w=1)


def tutte(g: Graph, **opts) -> MPoly:
    """Tutte polynomial T(G, x, y) from the rank/corank expansion."""
    hist = histogram(g, **opts)
    k0 = g.k()
    terms: dict[tuple[int, int], int] = {}
    for (ne, sizes), c in hist.items():
        k = len(sizes)
        key = (k - k0, ne + k - g.n)
        terms[key] = terms.get(key, 0) + c
    total = MPoly()
    for (r, s), c in sorted(terms.items()):
        total = total + (X - 1) ** r * (Y - 1) ** s * c
    return total


def check_zt(g: Graph, **opts) -> bool:
    """Check Z(G, q, v, 1) = (x-1)^k (y-1)^n T(G, x, y) with q = (x-1)(y-1), v = y-1."""
    z = potts_Z(g, **opts).substitute(w=1)
    lhs = z.substitute(q=(X - 1) * (Y - 1), v=Y - 1)
    rhs = (X - 1) ** g.k() * (Y - 1) ** g.n * tutte(g, **opts)
    return lhs == rhs


def u_eval(g: Graph, x, y, w, **opts):
    """Numeric value of the field-dependent Tutte generalization U(G, x, y, w).

    Exact for rational inputs.

    Raises:
        ZeroDivisionError: at the prefactor poles ``x = 1`` or ``y = 1``.
    """
    x, y, w = (Fraction(t) if isinstance(t, (int, str)) else t for t in (x, y, w))
    if x == 1 or y == 1:
        raise ZeroDivisionError("U has a prefactor pole at x = 1 or y = 1")
    hist = histogram(g, **opts)
    base = x * y - x - y
    total = 0
    for (ne, sizes), c in hist.items():
        term = c * (y - 1) ** ne
        for s in sizes:
            term *= base + w**s
        total += term
    return total / ((x - 1) ** g.k() * (y - 1) ** g.n)


def delta_ph(g: Graph, e: int, **opts) -> MPoly:
    """Deviation Ph(G) - [Ph(G - e) - Ph(G / e)] from deletion-contraction.

    Raises:
        ValueError: if edge ``e`` is a loop.
    """
    u, v = g.edges[e]
    if u == v:
        raise ValueError("deletion-contraction deviation is undefined for a loop")
    return ph(g, **opts) - (ph(delete_edge(g, e), **opts) - ph(contract_edge(g, e), **opts))


def chromatic_number(g: Graph, limit: int = 12) -> int:
    """Smallest q with P(G, q) > 0; 0 for the empty graph, raises for loops."""
    if g.has_loop():
        raise ValueError("graph with a loop has no proper coloring")
    if g.n == 0:
        return 0
    p = chromatic(g)
    for q in range(1, limit + 1):
        if p.evaluate(q=q) != 0:
            return q
    raise ValueError("chromatic number above search limit")


def falling_factor(k: int, start: int = 0) -> MPoly:
    """prod_{j=start}^{k-1} (q - j)."""
    out = MPoly.const(1)
    for j in range(start, k):
        out = out * (Q - j)
    return out


def factor_multiplicity(p: MPoly, d: MPoly | str) -> int:
    """Largest m with d**m dividing p (p nonzero)."""
    d = parse(d) if isinstance(d, str) else d
    m = 0
    while True:
        ok, quot = divides(d, p)
        if not ok:
            return m
        p = quot
        m += 1


def sum_polys(ps: Iterable[MPoly]) -> MPoly:
    total = MPoly()
    for p in ps:
        total = total + p
    return total
