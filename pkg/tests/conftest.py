import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from edgering.model import DirectedEdge, MixedGraph, SignedEdge, parse_graph

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIG1_G = "vertices 3\n+ 1 1\n+ 1 2\n+ 2 3\n- 3 3\n"
FIG1_H = "vertices 3\n+ 1 1\n+ 1 2\n- 2 3\n- 3 3\n"


@pytest.fixture
def fig_g():
    return parse_graph(FIG1_G)


@pytest.fixture
def fig_h():
    return parse_graph(FIG1_H)


@st.composite
def signed_graphs(draw, max_vertices=6, max_edges=9, loops=True):
    n = draw(st.integers(1, max_vertices))
    pool = [SignedEdge(u, v, s) for u in range(n) for v in range(u if loops else u + 1, n) for s in (1, -1)]
    if not pool:
        return MixedGraph(n)
    edges = draw(st.lists(st.sampled_from(pool), max_size=max_edges, unique=True))
    return MixedGraph(n, sorted(edges))


@st.composite
def mixed_graphs(draw, max_vertices=5, max_edges=8):
    n = draw(st.integers(2, max_vertices))
    spool = [SignedEdge(u, v, s) for u in range(n) for v in range(u, n) for s in (1, -1)]
    dpool = [DirectedEdge(u, v) for u in range(n) for v in range(n) if u != v]
    signed = draw(st.lists(st.sampled_from(spool), max_size=max_edges, unique=True))
    directed = draw(st.lists(st.sampled_from(dpool), max_size=max(0, max_edges - len(signed)), unique=True))
    return MixedGraph(n, sorted(signed), sorted(directed, key=lambda d: (d.tail, d.head)))
