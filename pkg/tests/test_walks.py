import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgering.errors import ConditionViolatedError, DomainError, PreconditionError
from edgering.model import parse_graph, weighted_sum
from edgering.oracle import (
    find_reducing_closed_walk,
    is_forest_unicyclic_odd,
    is_reducing_closed_walk,
    lattice_member,
    reduce_to_forest_unicyclic,
    verify_identity_weights,
)
from edgering.oracle.lattice import graph_hermite_form
from edgering.oracle.walks import (
    closed_walk_weights,
    fractional_parts_are_half_odd_cycles,
    is_alternating_closed_walk,
    reduced_support_graph,
    vertex_sums,
)

from .conftest import mixed_graphs, signed_graphs

TRIANGLE = "vertices 3\n+ 1 2\n+ 2 3\n+ 1 3\n"
SQUARE = "vertices 4\n+ 1 2\n+ 2 3\n+ 3 4\n+ 1 4\n"
BOWTIE = "vertices 5\n+ 1 2\n+ 2 3\n+ 1 3\n+ 3 4\n+ 4 5\n+ 3 5\n"


def _kernel_weighting(g, rng, spread=3):
    basis = graph_hermite_form(g).kernel_basis()
    refs = g.edge_refs()
    w = [0] * len(refs)
    for b in basis:
        k = rng.randint(-spread, spread)
        for i, x in enumerate(b):
            w[i] += k * x
    return dict(zip(refs, w))


# ----------------------------------------------------------- identity walks


def test_condition_violated_triangle():
    g = parse_graph(TRIANGLE)
    refs = g.edge_refs()
    with pytest.raises(ConditionViolatedError) as exc:
        verify_identity_weights(g, {refs[0]: 1, refs[1]: -1, refs[2]: 0})
    assert exc.value.vertex == 0
    assert "vertex 1" in str(exc.value)


def test_square_alternating():
    g = parse_graph("vertices 4\n+ 1 2\n+ 2 3\n+ 3 4\n+ 1 4\n")
    r = {g.label(x): x for x in g.edge_refs()}
    a = {r["+1 2"]: 1, r["+2 3"]: -1, r["+3 4"]: 1, r["+1 4"]: -1}
    d = verify_identity_weights(g, a)
    assert len(d.walks) == 1 and len(d.walks[0]) == 4
    assert d.edge_sums() == a


def test_loops_and_path(fig_h):
    # rho(+11) + rho(-33) = 2 rho(+12) + 2 rho(-23)
    r = {fig_h.label(x): x for x in fig_h.edge_refs()}
    a = {r["+1 1"]: 1, r["-3 3"]: 1, r["+1 2"]: -2, r["-2 3"]: -2}
    assert not any(weighted_sum(fig_h, a))
    d = verify_identity_weights(fig_h, a)
    assert d.edge_sums() == a
    for w in d.walks:
        assert is_alternating_closed_walk(fig_h, w)


def test_zero_weighting(fig_g):
    d = verify_identity_weights(fig_g, {})
    assert d.walks == []


def test_non_integer_rejected(fig_g):
    refs = fig_g.edge_refs()
    with pytest.raises(DomainError):
        verify_identity_weights(fig_g, {refs[0]: Fraction(1, 2)})


def test_mixed_identity():
    g = parse_graph("vertices 3\n> 1 2\n> 2 3\n> 3 1\n")
    a = {r: 1 for r in g.edge_refs()}
    assert not any(weighted_sum(g, a))
    d = verify_identity_weights(g, a)
    assert d.augmented is not None
    assert sum(len(w) for w in d.walks) == 6


def test_vertex_sums_zero_iff_rho_zero():
    g = parse_graph(BOWTIE)
    rng = random.Random(1)
    for _ in range(20):
        a = {r: rng.randint(-2, 2) for r in g.edge_refs()}
        assert (not any(vertex_sums(g, a))) == (not any(weighted_sum(g, a)))


@given(signed_graphs(max_vertices=6, max_edges=9), st.integers(0, 10**6))
def test_identity_roundtrip(g, seed):
    if not g.num_edges:
        return
    a = _kernel_weighting(g, random.Random(seed))
    d = verify_identity_weights(g, a)
    assert d.edge_sums() == {r: x for r, x in a.items() if x}
    for w in d.walks:
        assert is_alternating_closed_walk(g, w)


@settings(max_examples=40)
@given(mixed_graphs(max_vertices=4, max_edges=7), st.integers(0, 10**6))
def test_identity_mixed_roundtrip(g, seed):
    if not g.num_edges:
        return
    a = _kernel_weighting(g, random.Random(seed))
    d = verify_identity_weights(g, a)
    assert not any(weighted_sum(g, a))
    assert sum(abs(x) for x in d.edge_sums().values()) >= sum(abs(x) for x in a.values())


# --------------------------------------------------------- reducing walks


def test_reducing_walk_square():
    g = parse_graph(SQUARE)
    found = find_reducing_closed_walk(g)
    assert found is not None
    verts, edges = found
    assert is_reducing_closed_walk(g, verts, edges)
    assert len(edges) == 4


def test_no_reducing_walk_in_tree_or_odd_cycle():
    assert find_reducing_closed_walk(parse_graph("vertices 4\n+ 1 2\n- 2 3\n+ 2 4\n")) is None
    assert find_reducing_closed_walk(parse_graph(TRIANGLE)) is None


def test_reducing_walk_bowtie():
    g = parse_graph(BOWTIE)
    verts, edges = find_reducing_closed_walk(g)
    assert len(edges) == 6
    assert not any(weighted_sum(g, closed_walk_weights(g, edges)))


def test_reducing_walk_disjoint_loops():
    g = parse_graph("vertices 3\n+ 1 1\n+ 1 2\n+ 2 3\n- 3 3\n")
    verts, edges = find_reducing_closed_walk(g)
    # loop, path, loop, path back
    assert len(edges) == 6
    c = closed_walk_weights(g, edges)
    assert not any(weighted_sum(g, c))


def test_reducing_checker_rejects_odd():
    g = parse_graph(TRIANGLE)
    verts = (0, 1, 2)
    assert not is_reducing_closed_walk(g, verts, tuple(g.edge_refs()[i] for i in (0, 1, 2)))


# --------------------------------------------------------------- reduction


def test_reduce_square():
    g = parse_graph(SQUARE)
    a = {r: 1 for r in g.edge_refs()}
    red = reduce_to_forest_unicyclic(g, a)
    assert red.steps == 1
    assert len(red.support) == 2
    assert weighted_sum(g, red.weights) == weighted_sum(g, a)
    assert all(x == 2 for x in red.weights.values())


def test_reduce_tree_unchanged():
    g = parse_graph("vertices 4\n+ 1 2\n- 2 3\n+ 2 4\n")
    a = {r: Fraction(3, 2) for r in g.edge_refs()}
    red = reduce_to_forest_unicyclic(g, a)
    assert red.steps == 0 and red.weights == a


def test_reduce_bowtie():
    g = parse_graph(BOWTIE)
    a = {r: 1 for r in g.edge_refs()}
    red = reduce_to_forest_unicyclic(g, a)
    assert red.steps >= 1
    assert is_forest_unicyclic_odd(g, red.support)
    assert weighted_sum(g, red.weights) == weighted_sum(g, a)


def test_reduce_fig_g_half(fig_g):
    # (1,0,-1) in the cone: the loops carry 1/2 and nothing reduces further
    refs = fig_g.edge_refs()
    a = {refs[0]: Fraction(1, 2), refs[3]: Fraction(1, 2)}
    red = reduce_to_forest_unicyclic(fig_g, a)
    assert red.weights == a
    assert fractional_parts_are_half_odd_cycles(fig_g, red.weights)


def test_reduce_needs_positive(fig_g):
    refs = fig_g.edge_refs()
    with pytest.raises(PreconditionError):
        reduce_to_forest_unicyclic(fig_g, {refs[0]: 0})


def test_reduce_mixed():
    g = parse_graph("vertices 3\n+ 1 1\n> 1 2\n> 2 3\n> 3 1\n- 3 3\n")
    a = {r: Fraction(k + 1, 2) for k, r in enumerate(g.edge_refs())}
    red = reduce_to_forest_unicyclic(g, a)
    assert weighted_sum(g, red.weights) == weighted_sum(g, a)
    h, support, _ = reduced_support_graph(red)
    assert is_forest_unicyclic_odd(h, support)


def test_half_odd_cycles_helper():
    g = parse_graph(TRIANGLE)
    half = {r: Fraction(1, 2) for r in g.edge_refs()}
    assert fractional_parts_are_half_odd_cycles(g, half)
    assert not fractional_parts_are_half_odd_cycles(g, {r: Fraction(1, 3) for r in g.edge_refs()})
    sq = parse_graph(SQUARE)
    assert not fractional_parts_are_half_odd_cycles(sq, {r: Fraction(1, 2) for r in sq.edge_refs()})


@given(signed_graphs(max_vertices=6, max_edges=9), st.lists(st.integers(1, 12), min_size=9, max_size=9))
def test_reduction_properties(g, nums):
    refs = g.edge_refs()
    if not refs:
        return
    a = {r: Fraction(k, 4) for r, k in zip(refs, nums)}
    red = reduce_to_forest_unicyclic(g, a)
    alpha = weighted_sum(g, a)
    assert weighted_sum(g, red.weights) == alpha
    assert all(x > 0 for x in red.weights.values())
    assert is_forest_unicyclic_odd(g, red.support)
    assert red.steps <= len(refs)
    if all(x.denominator == 1 for x in alpha) and lattice_member(g, tuple(int(x) for x in alpha)) is not None:
        assert fractional_parts_are_half_odd_cycles(g, red.weights)


@settings(max_examples=40)
@given(mixed_graphs(max_vertices=4, max_edges=7), st.lists(st.integers(1, 6), min_size=7, max_size=7))
def test_reduction_mixed_properties(g, nums):
    refs = g.edge_refs()
    if not refs:
        return
    a = {r: Fraction(k, 3) for r, k in zip(refs, nums)}
    red = reduce_to_forest_unicyclic(g, a)
    assert weighted_sum(g, red.weights) == weighted_sum(g, a)
    h, support, w = reduced_support_graph(red)
    assert is_forest_unicyclic_odd(h, support)
