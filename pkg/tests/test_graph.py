from __future__ import annotations

import random

import pytest
from hypothesis import given

from wchrom.graph import (Graph, builtin_graphs, contract_edge, delete_edge, disjoint_union,
                          family, named_tree, parse_family, read_edge_list, reduce_multiedges,
                          sq_strip_cyclic, write_edge_list, random_graph)

from conftest import small_graphs


@given(small_graphs(loops=True))
def test_edge_list_round_trip(g):
    assert read_edge_list(write_edge_list(g)) == g


@given(small_graphs())
def test_delete_and_contract_sizes(g):
    for i in range(g.e):
        assert delete_edge(g, i).e == g.e - 1
        c = contract_edge(g, i)
        assert c.n == g.n - 1 and c.e == g.e - 1


@given(small_graphs(), small_graphs())
def test_disjoint_union_counts(a, b):
    u = disjoint_union(a, b)
    assert (u.n, u.e, u.k()) == (a.n + b.n, a.e + b.e, a.k() + b.k())


def test_edges_are_canonical():
    assert Graph(3, ((2, 0), (1, 0))) == Graph(3, ((0, 1), (0, 2)))
    with pytest.raises(ValueError):
        Graph(2, ((0, 2),))


def test_reduce_multiedges():
    g = Graph(3, ((0, 1), (1, 0), (1, 2)))
    assert reduce_multiedges(g).edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("spec,n,e", [
    ("L:5", 5, 4), ("C:6", 6, 6), ("S:4", 4, 3), ("K:5", 5, 10), ("Wh:6", 6, 10),
    ("N:3", 3, 0), ("sqcyc:2x4", 8, 12), ("IsoY:6", 6, 5), ("Cr:6", 6, 5),
])
def test_family_sizes(spec, n, e):
    g = family(spec)
    assert (g.n, g.e) == (n, e)


def test_named_trees_are_trees():
    for name in ("Y5", "Y6", "IsoY6", "H6", "Cr6", "S6"):
        g = named_tree(name)
        assert g.e == g.n - 1 and g.is_connected()


def test_parse_family_errors():
    for bad in ("Q:3", "L", "sqcyc:2", "L:3x4"):
        with pytest.raises(ValueError):
            parse_family(bad)


def test_read_edge_list_errors():
    with pytest.raises(ValueError):
        read_edge_list("0 1\n")
    with pytest.raises(ValueError):
        read_edge_list("n 2\n0 1 2\n")
    assert read_edge_list("# c\nn 2\n0 1  # edge\n").e == 1


def test_strip_degree_regular():
    g = sq_strip_cyclic(2, 5)
    assert set(g.degrees()) == {3}


def test_builtin_and_random():
    assert all(g.n <= 4 for g in builtin_graphs(4))
    g = random_graph(random.Random(1), 6, 0.5, multi=0.5)
    assert g.n == 6
