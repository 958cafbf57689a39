"""Cluster histograms of spanning subgraphs, with compiled/pure backend selection.

The cluster histogram of a graph maps ``(e(G'), component sizes of G')`` to the
number of spanning subgraphs ``G'`` with that edge count and size profile.
Every size-dependent spanning-subgraph sum in the package (partition
functions, Tutte polynomial, field generalizations) is a linear functional
of this histogram.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Literal

from . import _pykernels
from .config import check_cap, default_threads
from .graph import Graph

try:  # pragma: no cover - depends on the build
    from . import _kernels as _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

Backend = Literal["auto", "python", "compiled"]
Histogram = dict  # {(ne, sizes_tuple): count}

_INT64_LIMIT = 1 << 62


def compiled_available() -> bool:
    return _ckernels is not None


def default_backend() -> str:
    env = os.environ.get("WCHROM_BACKEND", "auto")
    if env == "python" or _ckernels is None:
        return "python"
    return "compiled"


class _Plan:
    """Profile encoding for one graph: a mixed-radix code over component sizes >= 2."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.eu = [u for u, _ in g.edges]
        self.ev = [v for _, v in g.edges]
        comps = g.components()
        touched = {x for e in g.edges for x in e}
        self.active = len(touched)
        self.maxs = max((len(c) for c in comps), default=1)
        self.radix = [0] * (self.maxs + 2)
        self.W = [0] * (g.n + 2)
        place = 1
        for s in range(2, self.maxs + 1):
            self.W[s] = place
            self.radix[s] = self.active // s + 1
            place *= self.radix[s]
        self.span = place

    def fits_int64(self) -> bool:
        return self.span * (len(self.eu) + 1) < _INT64_LIMIT

    def decode(self, code: int) -> tuple[int, ...]:
        sizes = []
        rest = self.n
        for s in range(self.maxs, 1, -1):
            cnt = (code // self.W[s]) % self.radix[s]
            sizes += [s] * cnt
            rest -= s * cnt
        return tuple(sizes) + (1,) * rest


def _split(plan: _Plan, depth: int):
    """Decide the first ``depth`` branching edges in Python; return the subtasks."""
    E = len(plan.eu)
    parent = list(range(plan.n))
    size = [1] * plan.n
    W = plan.W
    tasks = []

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i, code, ne, c, d):
        while i < E and find(plan.eu[i]) == find(plan.ev[i]):
            c += 1
            i += 1
        if d == 0 or i == E:
            tasks.append((i, list(parent), list(size), code, ne, c))
            return
        rec(i + 1, code, ne, c, d - 1)
        ru, rv = find(plan.eu[i]), find(plan.ev[i])
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        a, b = size[ru], size[rv]
        parent[rv] = ru
        size[ru] = a + b
        rec(i + 1, code - W[a] - W[b] + W[a + b], ne + 1, c, d - 1)
        parent[rv] = rv
        size[ru] = a

    rec(0, 0, 0, 0, depth)
    return tasks


def cluster_histogram(g: Graph, *, backend: Backend = "auto", threads: int | None = None,
                      cap: int | None = None) -> Histogram:
    """Histogram ``{(ne, sizes): count}`` over all ``2**e`` spanning subgraphs.

    ``sizes`` is sorted in decreasing order and sums to ``n``. The result does
    not depend on the backend or the thread count.

    Raises:
        CapExceeded: if ``e(g)`` exceeds the enumeration cap.
    """
    check_cap(g.e, cap)
    if backend == "auto":
        backend = default_backend()
    if backend == "compiled" and _ckernels is None:
        raise RuntimeError("compiled kernel is not built; reinstall with Cython available")
    plan = _Plan(g)
    impl = _pykernels
    if backend == "compiled":
        if plan.fits_int64():
            impl = _ckernels
    threads = threads or default_threads()
    depth = 0
    if threads > 1 and g.e >= 16:
        depth = min(g.e - 1, max(2, (4 * threads - 1).bit_length()))
    tasks = _split(plan, depth)

    def run(task):
        i, parent, size, code, ne, c = task
        return impl.forest_histogram(plan.n, plan.eu, plan.ev, plan.W, i, parent, size,
                                     code, ne, c)

    if threads > 1 and len(tasks) > 1 and impl is _ckernels:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, tasks))
    else:
        parts = [run(t) for t in tasks]
    merged: dict = {}
    for part in parts:
        for key, cnt in part.items():
            merged[key] = merged.get(key, 0) + cnt
    out: Histogram = {}
    for (code, ne), cnt in merged.items():
        key = (ne, plan.decode(code))
        out[key] = out.get(key, 0) + cnt
    return out


def histogram_by_masks(g: Graph) -> Histogram:
    """Slow reference: one union-find pass per mask. Used by tests and the benchmark."""
    raw = _pykernels.mask_histogram(g.n, [u for u, _ in g.edges], [v for _, v in g.edges],
                                    range(1 << g.e))
    return {(ne, sizes): c for (sizes, ne), c in raw.items()}
