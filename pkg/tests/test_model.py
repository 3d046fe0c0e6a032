import json

import pytest
from hypothesis import given

from edgering.errors import ParseError, StructuralError, UnsupportedGeneratorError
from edgering.model import (
    DIRECTED,
    SIGNED,
    DirectedEdge,
    EdgeRef,
    MixedGraph,
    SignedEdge,
    components,
    edge_vectors,
    format_monomial,
    graph_to_json,
    parse_graph,
    parse_graph_json,
    parse_monomials,
    render_graph,
    render_monomials,
    rho,
    weighted_sum,
)

from .conftest import FIG1_G, mixed_graphs, signed_graphs


def test_rho_paper_values(fig_g):
    plus12 = fig_g.find_signed(0, 1, 1)
    assert rho(fig_g, plus12) == (1, 1, 0)
    assert rho(fig_g, fig_g.find_signed(2, 2, -1)) == (0, 0, -2)
    assert rho(fig_g, fig_g.find_signed(0, 0, 1)) == (2, 0, 0)
    # rho(+12) - rho(+23) = (1,0,-1)
    plus23 = fig_g.find_signed(1, 2, 1)
    assert weighted_sum(fig_g, {plus12: 1, plus23: -1}) == (1, 0, -1)


def test_rho_directed():
    g = MixedGraph(2, (), [DirectedEdge(0, 1)])
    assert rho(g, EdgeRef(DIRECTED, 0)) == (-1, 1)


def test_unknown_edge_ref(fig_g):
    with pytest.raises(StructuralError):
        rho(fig_g, EdgeRef(SIGNED, 9))
    with pytest.raises(StructuralError):
        rho(fig_g, EdgeRef(DIRECTED, 0))


def test_parse_figure_graph(fig_g):
    assert fig_g.n == 3
    assert set(fig_g.signed) == {SignedEdge(0, 0, 1), SignedEdge(0, 1, 1), SignedEdge(1, 2, 1), SignedEdge(2, 2, -1)}
    assert not fig_g.directed


def test_parse_empty_and_comments():
    g = parse_graph("vertices 1\n")
    assert g.n == 1 and g.num_edges == 0
    g = parse_graph("# a comment\nvertices 2   # two\n\n+ 1 2 # edge\n")
    assert g.signed == (SignedEdge(0, 1, 1),)


@pytest.mark.parametrize(
    "text, line",
    [
        ("vertices 2\n> 1 1\n", 2),
        ("vertices 2\n+ 1 3\n", 2),
        ("vertices 2\n+ 1 2\n+ 2 1\n", 3),
        ("vertices 2\n* 1 2\n", 2),
        ("+ 1 2\n", 1),
        ("vertices 2\n> 1 2\n> 1 2\n", 3),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_parallel_edges_allowed():
    g = parse_graph("vertices 2\n+ 1 2\n- 1 2\n> 1 2\n> 2 1\n")
    assert g.num_edges == 4


def test_parse_monomials_figure():
    g = parse_monomials("x1*x2\nx2*x3\nx1^2\nx3^-2")
    assert g == MixedGraph(3, [SignedEdge(0, 1, 1), SignedEdge(1, 2, 1), SignedEdge(0, 0, 1), SignedEdge(2, 2, -1)])
    assert set(g.signed) == set(parse_graph(FIG1_G).signed)


def test_parse_monomial_directed():
    g = parse_monomials("x1^-1*x2")
    assert g.directed == (DirectedEdge(0, 1),)
    assert parse_monomials("x2 * x1^-1").directed == (DirectedEdge(0, 1),)


@pytest.mark.parametrize("bad", ["x1*x2*x3", "x1^3", "x1*x2^-2", "x1", "x1^-1*x2^-1*x3"])
def test_unsupported_monomials(bad):
    with pytest.raises(UnsupportedGeneratorError):
        parse_monomials(bad)


def test_monomials_negative_pair_and_vertices():
    g = parse_monomials("vertices 5\nx1^-1*x3^-1\n")
    assert g.n == 5 and g.signed == (SignedEdge(0, 2, -1),)


def test_components():
    assert components(parse_graph(FIG1_G)) == [[0, 1, 2]]
    assert components(parse_graph("vertices 4\n+ 1 2\n")) == [[0, 1], [2], [3]]
    two = parse_graph("vertices 6\n+ 1 2\n+ 2 3\n+ 1 3\n+ 4 5\n+ 5 6\n+ 4 6\n")
    assert components(two) == [[0, 1, 2], [3, 4, 5]]
    # directed edges connect
    assert components(parse_graph("vertices 3\n> 3 1\n")) == [[0, 2], [1]]


def test_format_monomial():
    assert format_monomial((1, 0, -1)) == "x1*x3^-1"
    assert format_monomial((0, 0)) == "1"
    assert format_monomial((2, -2)) == "x1^2*x2^-2"


@given(mixed_graphs())
def test_render_parse_roundtrip(g):
    assert parse_graph(render_graph(g)) == g
    assert parse_graph_json(json.dumps(graph_to_json(g))) == g
    assert parse_graph(json.dumps(graph_to_json(g))) == g


@given(mixed_graphs())
def test_monomial_roundtrip(g):
    assert parse_monomials(render_monomials(g)) == g


@given(mixed_graphs())
def test_rho_coordinate_sums_and_injective(g):
    vecs = edge_vectors(g)
    for ref, v in zip(g.edge_refs(), vecs):
        assert sum(v) == (0 if ref.kind == DIRECTED else 2 * g.sign(ref))
    assert len(set(vecs)) == len(vecs)


@given(signed_graphs())
def test_labels_roundtrip(g):
    for ref in g.edge_refs():
        assert g.ref_from_label(g.label(ref)) == ref


def test_duplicate_construction_rejected():
    with pytest.raises(StructuralError):
        MixedGraph(2, [SignedEdge(0, 1, 1), SignedEdge(1, 0, 1)])
    with pytest.raises(StructuralError):
        DirectedEdge(1, 1)
