"""Multi-field, s-color, edge-dependent coupling and weighted list-coloring variants."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .config import LIST_BUDGET, CapExceeded, check_cap
from .engine import _product, fold, histogram
from .graph import Graph
from .poly import MPoly

Value = int | Fraction | MPoly


def _lift(x: Value | str) -> MPoly:
    if isinstance(x, str):
        return MPoly.var(x)
    return MPoly.coerce(x)


@dataclass(frozen=True)
class FieldSpec:
    """How vertex weights enter the cluster factor.

    ``uniform_w``: one weighted color, factor ``q - 1 + w**size``.
    ``per_color``: ``q`` colors with their own weights, factor ``sum_p w_p**size``.
    ``s_color``: ``s`` colors share weight ``w``, factor ``q - s + s*w**size``.
    """

    mode: str = "uniform_w"
    q: int | None = None
    weights: tuple | None = None
    s: Value | str = "s"
    w: Value | str = "w"

    def __post_init__(self):
        if self.mode not in ("uniform_w", "per_color", "s_color"):
            raise ValueError(f"unknown field mode {self.mode!r}")
        if self.mode == "per_color":
            if self.q is None and self.weights is None:
                raise ValueError("per_color needs q or an explicit weight list")
            if self.weights is not None and self.q is not None and len(self.weights) != self.q:
                raise ValueError("weight list length must equal q")
        if self.mode == "s_color" and self.q is not None and isinstance(self.s, (int, Fraction)):
            if not 0 <= self.s <= self.q:
                raise ValueError("s must satisfy 0 <= s <= q")

    def factor(self):
        if self.mode == "uniform_w":
            q = MPoly.var("q") if self.q is None else MPoly.const(self.q)
            w = _lift(self.w)
            return lambda n: q - 1 + w**n
        if self.mode == "per_color":
            ws = self.weights or tuple(f"w_{p}" for p in range(1, self.q + 1))
            ws = [_lift(x) for x in ws]
            return lambda n: sum((x**n for x in ws), MPoly())
        q = MPoly.var("q") if self.q is None else MPoly.const(self.q)
        s = _lift(self.s)
        w = _lift(self.w)
        return lambda n: q - s + s * w**n


@dataclass(frozen=True)
class CouplingSpec:
    """``uniform_v`` uses one coupling ``v``; ``per_edge`` takes one value per edge."""

    mode: str = "uniform_v"
    v: Value | str = "v"
    values: tuple | None = None

    def __post_init__(self):
        if self.mode not in ("uniform_v", "per_edge"):
            raise ValueError(f"unknown coupling mode {self.mode!r}")


def edge_coupling_names(g: Graph) -> list[str]:
    """Default per-edge coupling names ``v_1 .. v_e`` in canonical edge order."""
    return [f"v_{i + 1}" for i in range(g.e)]


def potts_Z_general(g: Graph, fields: FieldSpec = FieldSpec(),
                    couplings: CouplingSpec = CouplingSpec(), **opts) -> MPoly:
    """Generalized cluster sum with the given field and coupling structure.

    Per-edge couplings need the individual edge subsets, so that path walks the
    subsets directly and is limited to 20 edges unless ``cap`` says otherwise.
    """
    factor = fields.factor()
    if couplings.mode == "uniform_v":
        v = _lift(couplings.v)
        return fold(histogram(g, **opts), factor, lambda ne: v**ne)
    values = couplings.values or tuple(edge_coupling_names(g))
    if len(values) != g.e:
        raise ValueError("per_edge couplings need exactly one value per edge")
    check_cap(g.e, opts.get("cap", 20))
    vs = [_lift(x) for x in values]
    by_sizes: dict[tuple[int, ...], MPoly] = {}
    for mask, sizes in _walk_subsets(g):
        mono = MPoly.const(1)
        for i in range(g.e):
            if mask >> i & 1:
                mono = mono * vs[i]
        by_sizes[sizes] = by_sizes.get(sizes, MPoly()) + mono
    total = MPoly()
    for sizes in sorted(by_sizes):
        total = total + by_sizes[sizes] * _product(sizes, factor)
    return total


def _walk_subsets(g: Graph):
    """Yield ``(mask, sorted component sizes)`` for every edge subset."""
    parent = list(range(g.n))
    size = [1] * g.n

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def sizes():
        return tuple(sorted((size[x] for x in range(g.n) if parent[x] == x), reverse=True))

    def rec(i, mask):
        if i == g.e:
            yield mask, sizes()
            return
        yield from rec(i + 1, mask)
        u, v = g.edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            yield from rec(i + 1, mask | 1 << i)
            return
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        parent[rv] = ru
        size[ru] += size[rv]
        yield from rec(i + 1, mask | 1 << i)
        size[ru] -= size[rv]
        parent[rv] = rv

    yield from rec(0, 0)


def s_color_Z(g: Graph, **opts) -> MPoly:
    """Z(G, q, s, v, w) with symbolic ``q, s, v, w``."""
    return potts_Z_general(g, FieldSpec("s_color"), CouplingSpec(), **opts)


def s_color_ph(g: Graph, **opts) -> MPoly:
    return s_color_Z(g, **opts).substitute(v=-1)


def eta(r: int, q: int) -> MPoly:
    """Power sum ``sum_p w_p**r`` over colors 1..q."""
    return sum((MPoly.var(f"w_{p}") ** r for p in range(1, q + 1)), MPoly())


def list_coloring_ph(g: Graph, lists: Sequence[Sequence[int]], weights: Sequence | None = None,
                     budget: int = LIST_BUDGET) -> MPoly:
    """Weighted list-coloring sum over proper colorings with vertex ``i`` restricted to ``lists[i]``.

    Colors are positive integers. With ``weights`` omitted each color ``p``
    carries the symbol ``w_p``; pass all ones to count list colorings.

    Raises:
        CapExceeded: if the product of list lengths exceeds ``budget``.
    """
    if len(lists) != g.n:
        raise ValueError("need one color list per vertex")
    work = 1
    for c in lists:
        work *= len(c)
    if work > budget:
        raise CapExceeded(f"list-coloring enumeration of {work} assignments exceeds {budget}")
    colors = sorted({c for lst in lists for c in lst})
    if weights is None:
        wmap = {c: MPoly.var(f"w_{c}") for c in colors}
    else:
        wmap = {c: MPoly.coerce(weights[c - 1]) for c in colors}
    if g.has_loop():
        return MPoly()
    total = MPoly()
    for assign in itertools.product(*lists):
        if any(assign[u] == assign[v] for u, v in g.edges):
            continue
        t = MPoly.const(1)
        for c in assign:
            t = t * wmap[c]
        total = total + t
    return total
