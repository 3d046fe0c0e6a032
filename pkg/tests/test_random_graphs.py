import itertools
import random

import pytest

from edgering.model import MixedGraph, SignedEdge
from edgering.normality import decide
from edgering.random_graphs import (
    count_signed_graphs,
    random_mixed_graph,
    seeded_graphs,
    signed_graph_classes,
)


def _orbit_key(edges, n, flip):
    best = None
    for p in itertools.permutations(range(n)):
        for f in (1, -1) if flip else (1,):
            img = tuple(sorted((min(p[u], p[v]), max(p[u], p[v]), f * s) for u, v, s in edges))
            best = img if best is None or img < best else best
    return best


@pytest.mark.parametrize("n,m,flip", [(2, 4, True), (3, 3, True), (3, 4, False), (3, 5, True)])
def test_classes_match_brute_force(n, m, flip):
    pool = [(u, v, s) for u in range(n) for v in range(u, n) for s in (1, -1)]
    keys = {_orbit_key(sub, n, flip) for k in range(m + 1) for sub in itertools.combinations(pool, k)}
    reps = signed_graph_classes(n, m, flip)
    assert len(reps) == len(keys)
    assert {_orbit_key([(e.u, e.v, e.sign) for e in g.signed], n, flip) for g in reps} == keys


def test_class_count_4_6():
    assert len(signed_graph_classes(4, 6)) == 1565
    assert count_signed_graphs(4, 6) == 60460


def test_normality_constant_on_classes():
    # relabelled and sign-flipped copies decide the same way
    for g in signed_graph_classes(3, 4):
        flipped = MixedGraph(g.n, sorted(SignedEdge(e.u, e.v, -e.sign) for e in g.signed))
        p = (2, 0, 1)
        moved = MixedGraph(g.n, sorted(SignedEdge(min(p[e.u], p[e.v]), max(p[e.u], p[e.v]), e.sign) for e in g.signed))
        assert decide(g).normal == decide(flipped).normal == decide(moved).normal


def test_seeded_is_deterministic():
    a = seeded_graphs("mixed", 30, 9)
    b = seeded_graphs("mixed", 30, 9)
    assert a == b
    assert seeded_graphs("mixed", 30, 10) != a


@pytest.mark.parametrize("kind", ["mixed", "directed", "signed"])
def test_seeded_bounds(kind):
    for g in seeded_graphs(kind, 50, 1, max_vertices=6, max_edges=9):
        assert g.n <= 6 and g.num_edges <= 9
        if kind == "directed":
            assert not g.signed
        if kind == "signed":
            assert not g.directed


def test_unknown_kind():
    with pytest.raises(ValueError):
        seeded_graphs("hyper", 1, 0)


def test_mixed_has_both_kinds():
    rng = random.Random(3)
    gs = [random_mixed_graph(rng) for _ in range(100)]
    assert any(g.directed and g.signed for g in gs)
