"""Finite multigraphs with loops, the named graph families, and subgraph bookkeeping."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

Edge = tuple[int, int]


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Multigraph on vertices ``0..n-1``.

    Edges are stored as sorted ``(min, max)`` pairs in sorted order, so two
    graphs with the same edge multiset compare equal. Loops are ``(u, u)``.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        es = []
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has a vertex outside [0, {self.n})")
            es.append(_canon(u, v))
        object.__setattr__(self, "edges", tuple(sorted(es)))

    @property
    def e(self) -> int:
        return len(self.edges)

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def components(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups: dict[int, list[int]] = {}
        for x in range(self.n):
            groups.setdefault(find(x), []).append(x)
        return sorted(groups.values())

    def k(self) -> int:
        return len(self.components())

    def is_connected(self) -> bool:
        return self.n > 0 and self.k() == 1

    def __str__(self) -> str:
        tag = f" {self.label}" if self.label else ""
        return f"Graph{tag}(n={self.n}, e={self.e})"


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shifted = [(u + a.n, v + a.n) for u, v in b.edges]
    return Graph(a.n + b.n, a.edges + tuple(shifted))


def reduce_multiedges(g: Graph) -> Graph:
    """Collapse repeated vertex pairs to one edge. Loops are left untouched."""
    seen = set()
    out = []
    for u, v in g.edges:
        if u == v:
            out.append((u, v))
        elif (u, v) not in seen:
            seen.add((u, v))
            out.append((u, v))
    return Graph(g.n, tuple(out), g.label)


def delete_edge(g: Graph, i: int) -> Graph:
    if not 0 <= i < g.e:
        raise IndexError(f"edge index {i} out of range for e={g.e}")
    return Graph(g.n, g.edges[:i] + g.edges[i + 1 :])


def contract_edge(g: Graph, i: int) -> Graph:
    """Identify the endpoints of edge ``i``, keeping every other edge.

    Edges parallel to the contracted one become loops. Contracting a loop just
    removes it.
    """
    if not 0 <= i < g.e:
        raise IndexError(f"edge index {i} out of range for e={g.e}")
    a, b = g.edges[i]
    rest = g.edges[:i] + g.edges[i + 1 :]
    if a == b:
        return Graph(g.n, rest)

    def relabel(x):
        if x == b:
            x = a
        return x - 1 if x > b else x

    return Graph(g.n - 1, tuple((relabel(u), relabel(v)) for u, v in rest))


# spanning subgraphs


@dataclass(frozen=True)
class SubgraphSummary:
    edge_mask: int
    k: int
    comp_sizes: tuple[int, ...]
    cyc: int
    n_edges: int


def subgraph_summary(g: Graph, mask: int | Sequence[bool]) -> SubgraphSummary:
    """Components of the spanning subgraph selected by ``mask``.

    ``mask`` is either an integer bitmask (bit ``i`` selects edge ``i``) or a
    sequence of booleans of length ``e(g)``.
    """
    if not isinstance(mask, int):
        bits = list(mask)
        if len(bits) != g.e:
            raise ValueError(f"mask length {len(bits)} != e(G) = {g.e}")
        mask = sum(1 << i for i, b in enumerate(bits) if b)
    elif mask < 0 or mask >> g.e:
        raise ValueError("mask has bits beyond the edge list")
    sel = [g.edges[i] for i in range(g.e) if mask >> i & 1]
    sub = Graph(g.n, tuple(sel))
    sizes = tuple(sorted((len(c) for c in sub.components()), reverse=True))
    k = len(sizes)
    return SubgraphSummary(mask, k, sizes, len(sel) + k - g.n, len(sel))


def enumerate_masks(g: Graph, cap: int | None = None, start: int = 0,
                    stop: int | None = None) -> Iterator[int]:
    """Yield edge-subset bitmasks in ``[start, stop)``; the default range is all ``2**e``."""
    from .config import check_cap

    check_cap(g.e, cap)
    total = 1 << g.e
    stop = total if stop is None else min(stop, total)
    return iter(range(start, stop))


def mask_ranges(e: int, parts: int) -> list[tuple[int, int]]:
    """Split ``range(2**e)`` into ``parts`` contiguous disjoint ranges."""
    total = 1 << e
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out = []
    lo = 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


# families


def empty(n: int) -> Graph:
    return Graph(n, (), f"N{n}")


def line(n: int) -> Graph:
    if n < 1:
        raise ValueError("L_n requires n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), f"L{n}")


def circuit(n: int) -> Graph:
    """Cycle on n vertices; C_1 is a single loop and C_2 a double edge."""
    if n < 1:
        raise ValueError("C_n requires n >= 1")
    if n == 1:
        return Graph(1, ((0, 0),), "C1")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)), f"C{n}")


def star(n: int) -> Graph:
    if n < 1:
        raise ValueError("S_n requires n >= 1")
    return Graph(n, tuple((0, i) for i in range(1, n)), f"S{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("K_n requires n >= 1")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)), f"K{n}")


def wheel(n: int) -> Graph:
    """Hub vertex 0 joined to every vertex of a C_{n-1} rim on ``1..n-1``."""
    if n < 3:
        raise ValueError("Wh_n requires n >= 3")
    rim = circuit(n - 1)
    edges = [(0, i) for i in range(1, n)] + [(u + 1, v + 1) for u, v in rim.edges]
    return Graph(n, tuple(edges), f"Wh{n}")


_TREES = {
    "Y5": (5, [(0, 1), (1, 2), (2, 3), (1, 4)]),
    "Y6": (6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]),
    "IsoY6": (6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]),
    "H6": (6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]),
    "Cr6": (6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5)]),
}


def named_tree(name: str) -> Graph:
    if name == "S6":
        return Graph(6, star(6).edges, "S6")
    if name not in _TREES:
        raise ValueError(f"unknown tree {name!r}")
    n, es = _TREES[name]
    return Graph(n, tuple(es), name)


def sq_strip_cyclic(ly: int, m: int) -> Graph:
    """Square-lattice strip of width ``ly`` and length ``m``, periodic along its length.

    Vertex ``(x, y)`` is ``x * ly + y``. Small ``m`` produces loops (m=1) or
    doubled longitudinal edges (m=2); both are kept.
    """
    if ly < 1 or m < 1:
        raise ValueError("strip needs width >= 1 and length >= 1")
    edges = []
    for x in range(m):
        for y in range(ly - 1):
            edges.append((x * ly + y, x * ly + y + 1))
        for y in range(ly):
            edges.append((x * ly + y, ((x + 1) % m) * ly + y))
    return Graph(ly * m, tuple(edges), f"sqcyc{ly}x{m}")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int = 0
    width: int = 0
    length: int = 0

    def build(self) -> Graph:
        return build_family(self)


_KIND_ALIASES = {
    "N": "N", "L": "L", "C": "C", "S": "S", "K": "K", "WH": "Wh",
    "Y": "Y", "ISOY": "IsoY", "H": "H", "CR": "Cr", "SQCYC": "SqStripCyc",
    "SQSTRIPCYC": "SqStripCyc",
}


def build_family(spec: FamilySpec) -> Graph:
    kind = spec.kind
    n = spec.n
    builders = {"N": empty, "L": line, "C": circuit, "S": star, "K": complete, "Wh": wheel}
    if kind in builders:
        if kind == "N" and n < 0:
            raise ValueError("N_n requires n >= 0")
        return builders[kind](n)
    if kind in ("Y", "IsoY", "H", "Cr"):
        name = f"{kind}{n}"
        if name not in _TREES:
            raise ValueError(f"{kind} is only defined for the listed sizes, not n={n}")
        return named_tree(name)
    if kind in _TREES or kind == "S6":
        return named_tree(kind)
    if kind == "SqStripCyc":
        return sq_strip_cyclic(spec.width, spec.length)
    raise ValueError(f"unknown family kind {kind!r}")


def parse_family(text: str) -> FamilySpec:
    """Parse strings such as ``L:5``, ``Wh:5``, ``IsoY:6`` or ``sqcyc:2x4``."""
    m = re.fullmatch(r"\s*([A-Za-z]+)\s*:\s*(\d+)(?:\s*x\s*(\d+))?\s*", text)
    if not m:
        raise ValueError(f"bad family string {text!r}")
    kind = _KIND_ALIASES.get(m.group(1).upper())
    if kind is None:
        raise ValueError(f"unknown family kind {m.group(1)!r}")
    if kind == "SqStripCyc":
        if m.group(3) is None:
            raise ValueError("sqcyc needs WIDTHxLENGTH")
        return FamilySpec(kind, width=int(m.group(2)), length=int(m.group(3)))
    if m.group(3) is not None:
        raise ValueError(f"{kind} takes a single size")
    return FamilySpec(kind, n=int(m.group(2)))


def family(text: str) -> Graph:
    return build_family(parse_family(text))


def builtin_graphs(max_n: int = 8) -> list[Graph]:
    """Every built-in family member with at most ``max_n`` vertices (loops excluded)."""
    out = []
    for n in range(1, max_n + 1):
        out += [empty(n), line(n), star(n), complete(n)]
        if n >= 2:
            out.append(circuit(n))
        if n >= 3:
            out.append(wheel(n))
    for name in ("Y5", "Y6", "IsoY6", "H6", "Cr6"):
        g = named_tree(name)
        if g.n <= max_n:
            out.append(g)
    for ly in (1, 2, 3):
        for m in range(3, max_n + 1):
            if ly * m <= max_n:
                out.append(sq_strip_cyclic(ly, m))
    seen = set()
    uniq = []
    for g in out:
        key = (g.n, g.edges)
        if key not in seen:
            seen.add(key)
            uniq.append(g)
    return uniq


# edge-list text format


def read_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines. ``#`` starts a comment."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        parts = s.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ValueError(f"line {lineno}: expected 'n <count>'")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise ValueError("missing 'n <count>' header")
    return Graph(n, tuple(edges))


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def random_graph(rng, n: int, p: float = 0.5, multi: float = 0.0) -> Graph:
    """Erdos-Renyi graph; with probability ``multi`` an edge is doubled."""
    edges: list[Edge] = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((i, j))
                if rng.random() < multi:
                    edges.append((i, j))
    return Graph(n, tuple(edges), f"rand{n}")
