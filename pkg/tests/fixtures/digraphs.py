"""Digraph helpers and text-format samples shared by the tests."""

from goodpairs.branchings import GoodPair

TWO_CYCLE_TEXT = "digraph\n2\n0 1\n1 0\n"

OUT_OF_RANGE_TEXT = "digraph\n2\n0 2\n"

BAD_ARC_TEXT = "digraph\n3\n0 1\n1 x\n"

COMMENTED_TEXT = """
# a 3-cycle

digraph
3
0 1
# the closing arcs
1 2
2 0
"""


def figure_pair(figure):
    """(host digraph, drawn good pair) of a figure table, as vertex indices."""
    d = figure.host()

    def arcs(pairs):
        return [(d.vertex(t), d.vertex(h)) for t, h in pairs]

    pair = GoodPair.of(d.vertex(figure.in_root), arcs(figure.in_arcs), d.vertex(figure.out_root), arcs(figure.out_arcs))
    return d, pair
