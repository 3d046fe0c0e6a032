import itertools

import pytest
from hypothesis import given

from edgering.cycles import (
    disjoint_odd_pairs,
    enumerate_cycles,
    enumerate_odd_cycles,
    find_cycle,
    make_cycle,
    signatures,
)
from edgering.errors import CapacityError, DomainError
from edgering.model import parse_graph

from .conftest import FIG1_G, mixed_graphs, signed_graphs


def brute_force_cycles(g):
    """Every simple cycle as (frozenset of edges) by trying all edge subsets."""
    refs = g.edge_refs()
    out = set()
    for k in range(1, len(refs) + 1):
        for sub in itertools.combinations(refs, k):
            deg = {}
            for r in sub:
                u, v = g.endpoints(r)
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            # connected?
            verts = set(deg)
            seen, stack = set(), [next(iter(verts))]
            while stack:
                x = stack.pop()
                if x in seen:
                    continue
                seen.add(x)
                for r in sub:
                    u, v = g.endpoints(r)
                    if x in (u, v):
                        stack.extend((u, v))
            if seen == verts:
                out.add(frozenset(sub))
    return out


def test_figure_graph_odd_cycles():
    g = parse_graph(FIG1_G)
    cycles = enumerate_odd_cycles(g)
    assert [c.vertices for c in cycles] == [(0,), (2,)]
    assert all(c.is_odd and c.signed_count == 1 for c in cycles)
    assert signatures(g, cycles[1]) == {2: -1}


def test_triangle_and_square():
    tri = parse_graph("vertices 3\n+ 1 2\n+ 2 3\n+ 1 3\n")
    (c,) = enumerate_odd_cycles(tri)
    assert signatures(tri, c) == {0: 1, 1: 1, 2: 1}
    sq = parse_graph("vertices 4\n+ 1 2\n+ 2 3\n+ 3 4\n+ 1 4\n")
    assert enumerate_odd_cycles(sq) == []
    assert len(enumerate_cycles(sq)) == 1


def test_mixed_two_cycles():
    g = parse_graph("vertices 2\n+ 1 2\n- 1 2\n> 1 2\n")
    cycles = enumerate_cycles(g)
    counts = sorted(c.signed_count for c in cycles)
    # {+12,-12} even, {+12,(1,2)} and {-12,(1,2)} odd
    assert counts == [1, 1, 2]
    assert len(enumerate_odd_cycles(g)) == 2


def test_signature_sum_five_cycle():
    g = parse_graph("vertices 5\n+ 1 2\n- 2 3\n+ 3 4\n- 4 5\n+ 5 1\n")
    (c,) = enumerate_odd_cycles(g)
    sig = signatures(g, c)
    assert sum(sig.values()) == sum(g.sign(e) for e in c.edges) == 1
    assert sig[0] == 1 and sig[1] == 0


def test_signatures_reject_directed():
    g = parse_graph("vertices 2\n+ 1 2\n> 1 2\n")
    (c,) = enumerate_odd_cycles(g)
    with pytest.raises(DomainError):
        signatures(g, c)


def test_pairs():
    assert len(disjoint_odd_pairs(parse_graph(FIG1_G))) == 1
    apart = parse_graph("vertices 6\n+ 1 2\n+ 2 3\n+ 1 3\n+ 4 5\n+ 5 6\n+ 4 6\n")
    assert disjoint_odd_pairs(apart) == []
    bowtie = parse_graph("vertices 5\n+ 1 2\n+ 2 3\n+ 1 3\n+ 3 4\n+ 4 5\n+ 3 5\n")
    assert disjoint_odd_pairs(bowtie) == []


def test_capacity_error_names_flag():
    k5 = parse_graph("vertices 5\n" + "".join(f"+ {i} {j}\n" for i in range(1, 6) for j in range(i + 1, 6)))
    with pytest.raises(CapacityError) as info:
        enumerate_cycles(k5, cap=10)
    assert "--cycle-cap" in str(info.value)


def test_make_cycle_validates():
    g = parse_graph("vertices 3\n+ 1 2\n+ 2 3\n+ 1 3\n")
    refs = g.edge_refs()
    with pytest.raises(DomainError):
        make_cycle(g, (0, 1, 2), (refs[0], refs[2], refs[1]))


def test_find_cycle():
    g = parse_graph("vertices 4\n+ 1 2\n+ 2 3\n+ 1 3\n+ 3 4\n+ 4 4\n")
    assert find_cycle(g, [2, 1, 0]).vertex_set == {0, 1, 2}
    with pytest.raises(DomainError):
        find_cycle(g, [0, 3])


@given(mixed_graphs(max_vertices=5, max_edges=8))
def test_enumeration_matches_brute_force(g):
    cycles = enumerate_cycles(g)
    got = [frozenset(c.edges) for c in cycles]
    assert len(set(got)) == len(got)
    assert set(got) == brute_force_cycles(g)
    odd = enumerate_odd_cycles(g)
    assert {frozenset(c.edges) for c in odd} == {s for s in set(got) if sum(r.kind == "signed" for r in s) % 2}


@given(signed_graphs(max_vertices=6, max_edges=10))
def test_odd_cycles_have_odd_nonzero_signatures(g):
    for c in enumerate_cycles(g):
        sig = signatures(g, c)
        assert sum(sig.values()) == sum(g.sign(e) for e in c.edges)
        nonzero = sum(1 for s in sig.values() if s)
        assert nonzero % 2 == c.signed_count % 2


@given(mixed_graphs())
def test_order_is_deterministic(g):
    a = enumerate_cycles(g)
    b = enumerate_cycles(type(g)(g.n, g.signed, g.directed))
    assert a == b
    assert a == sorted(a, key=lambda c: c.sort_key(g))
