from __future__ import annotations

from hypothesis import HealthCheck, settings, strategies as st

from wchrom.graph import Graph

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def small_graphs(draw, max_n: int = 5, max_e: int = 8, loops: bool = False):
    """Multigraphs on at most ``max_n`` vertices with at most ``max_e`` edges."""
    n = draw(st.integers(1, max_n))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    if not loops:
        pair = pair.filter(lambda e: e[0] != e[1])
    edges = draw(st.lists(pair, max_size=max_e)) if n > 1 or loops else []
    return Graph(n, tuple(edges))


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=7)
