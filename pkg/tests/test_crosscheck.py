from edgering.crosscheck import certify_generator, cross_check
from edgering.model import parse_graph

# triangle with a pendant path ending in a loop: the only generator has norm 4
FAR_PAIR = "vertices 5\n+ 1 2\n+ 2 3\n+ 1 3\n+ 3 4\n+ 4 5\n+ 5 5\n"


def test_both_normal(fig_h):
    c = cross_check(fig_h, 3, 8)
    assert c.agree and c.reason == "both normal" and c.generation is None


def test_both_not_normal(fig_g):
    c = cross_check(fig_g, 3, 8)
    assert c.agree and not c.beyond_window
    assert c.certified == [(1, 0, -1)]
    assert c.generation.ok


def test_beyond_window():
    g = parse_graph(FAR_PAIR)
    small = cross_check(g, 3, 12)
    assert small.report.generators == ((1, 1, 1, 0, 1),)
    assert small.oracle.normal and small.agree and small.beyond_window
    # widening the window brings the witness into view
    wide = cross_check(g, 4, 12)
    assert not wide.oracle.normal and wide.oracle.witness == (1, 1, 1, 0, 1)
    assert wide.agree and not wide.beyond_window


def test_certify(fig_g, fig_h):
    assert certify_generator(fig_g, (1, 0, -1), 10)
    assert not certify_generator(fig_h, (1, 0, -1), 10)
    # not in the lattice at all
    assert not certify_generator(fig_g, (1, 0, 0), 10)
