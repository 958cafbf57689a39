"""Pure-Python spanning-subgraph kernel, used when the compiled module is absent.

The enumeration walks edge decisions depth first with an undoable union-find.
An edge whose endpoints are already joined cannot change the component
structure, so both of its branches are folded into a single one and the
leaf spreads its count binomially over the edge totals. The number of leaves
is therefore the number of spanning forests reachable, not ``2**e``.
"""

from __future__ import annotations

from math import comb


def forest_histogram(n, eu, ev, radix_w, start, parent, size, code0, ne0, c0):
    """Count spanning subgraphs by (profile code, edge count).

    Args:
        n: vertex count.
        eu, ev: edge endpoint lists.
        radix_w: place value of each component size in the profile code
            (entry ``s`` for size ``s``; sizes 0 and 1 have weight 0).
        start: first undecided edge.
        parent, size: union-find state after the decided prefix (copied).
        code0, ne0, c0: profile code, chosen forest edges and deferred cycle
            edges for the prefix.

    Returns:
        dict mapping ``(code, ne)`` to a count.
    """
    E = len(eu)
    parent = list(parent)
    size = list(size)
    W = radix_w
    hist: dict = {}
    binoms = [[comb(c, j) for j in range(c + 1)] for c in range(E + 1)]

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i, code, ne, c):
        while i < E:
            ru = find(eu[i])
            rv = find(ev[i])
            if ru != rv:
                break
            c += 1
            i += 1
        if i == E:
            row = binoms[c]
            for j in range(c + 1):
                key = (code, ne + j)
                hist[key] = hist.get(key, 0) + row[j]
            return
        rec(i + 1, code, ne, c)
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        a, b = size[ru], size[rv]
        parent[rv] = ru
        size[ru] = a + b
        rec(i + 1, code - W[a] - W[b] + W[a + b], ne + 1, c)
        parent[rv] = rv
        size[ru] = a

    rec(start, code0, ne0, c0)
    return hist


def mask_histogram(n, eu, ev, masks):
    """Brute per-mask reference used by tests: ``(sorted sizes, ne)`` counts."""
    hist: dict = {}
    E = len(eu)
    for mask in masks:
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ne = 0
        for i in range(E):
            if mask >> i & 1:
                ne += 1
                ru, rv = find(eu[i]), find(ev[i])
                if ru != rv:
                    parent[ru] = rv
        counts: dict = {}
        for x in range(n):
            r = find(x)
            counts[r] = counts.get(r, 0) + 1
        key = (tuple(sorted(counts.values(), reverse=True)), ne)
        hist[key] = hist.get(key, 0) + 1
    return hist
