"""
Labeled arc tables of the small drawn digraphs and their good pairs.

Each table lists a host digraph and, where one is drawn, a good pair
(red in-branching, blue out-branching). Solvers match the pair arcs into
an input digraph; families build the hosts.
"""

from dataclasses import dataclass

from goodpairs.digraph import build_labeled


def _arcs(spec):
    return tuple(tuple(token.split(">")) for token in spec.split())


@dataclass(frozen=True)
class Figure:
    name: str
    names: tuple
    host_arcs: tuple
    in_root: str | None = None
    in_arcs: tuple = ()
    out_root: str | None = None
    out_arcs: tuple = ()
    optional_arcs: tuple = ()

    @property
    def has_pair(self):
        return self.in_root is not None

    def host(self):
        return build_labeled(list(self.names), self.host_arcs)


ST4_NAMES = ("a", "b", "c", "d")
ST4_ARCS = "a>b b>c c>d d>a a>c d>b"

# The strong tournament on four vertices; with r = a (optionally plus dc
# and/or cb) it has no good a-pair
ST4 = Figure("ST4", ST4_NAMES, _arcs(ST4_ARCS), optional_arcs=_arcs("d>c c>b"))

ST4_GOOD = (
    Figure("ST4good-b", ST4_NAMES, _arcs(ST4_ARCS), "b", _arcs("c>d a>c d>b"), "d", _arcs("a>b b>c d>a")),
    Figure("ST4good-c", ST4_NAMES, _arcs(ST4_ARCS), "c", _arcs("b>c a>c d>b"), "c", _arcs("a>b c>d d>a")),
    Figure("ST4good-d", ST4_NAMES, _arcs(ST4_ARCS), "d", _arcs("a>b b>c c>d"), "d", _arcs("d>a a>c d>b")),
)

ST4_PLUS = (
    Figure("ST4+ba", ST4_NAMES, _arcs(ST4_ARCS + " b>a"), "a", _arcs("c>d d>b b>a"), "d", _arcs("a>b b>c d>a")),
    Figure("ST4+ad", ST4_NAMES, _arcs(ST4_ARCS + " a>d"), "a", _arcs("b>c c>d d>a"), "a", _arcs("a>b a>c a>d")),
    Figure("ST4+ca", ST4_NAMES, _arcs(ST4_ARCS + " c>a"), "a", _arcs("b>c d>a c>a"), "a", _arcs("c>d a>c d>b")),
    Figure("ST4+bd", ST4_NAMES, _arcs(ST4_ARCS + " b>d"), "a", _arcs("b>c c>d d>a"), "a", _arcs("a>b a>c b>d")),
)

# Non-strong tournaments of order four
TT4 = Figure(
    "TT4",
    ("a1", "a2", "a3", "a4"),
    _arcs("a1>a2 a1>a3 a1>a4 a2>a3 a2>a4 a3>a4"),
    "a4",
    _arcs("a3>a4 a1>a3 a2>a4"),
    "a1",
    _arcs("a1>a2 a2>a3 a1>a4"),
)
D_PLUS = Figure(
    "D+",
    ("a1", "a2", "a3", "b"),
    _arcs("a1>a2 a2>a3 a3>a1 b>a1 b>a2 b>a3"),
    "a3",
    _arcs("a1>a2 a2>a3 b>a1"),
    "b",
    _arcs("a3>a1 b>a2 b>a3"),
)
D_MINUS = Figure(
    "D-",
    ("a1", "a2", "a3", "b"),
    _arcs("a1>a2 a2>a3 a3>a1 a1>b a2>b a3>b"),
    "b",
    _arcs("a2>a3 a1>b a3>b"),
    "a3",
    _arcs("a1>a2 a3>a1 a2>b"),
)
NON_STRONG_4 = (TT4, D_PLUS, D_MINUS)

# Base r-pairs on four vertices, the root of the in-branching playing r
FOUR_VERTEX_R_PAIRS = (*NON_STRONG_4, *ST4_GOOD, *ST4_PLUS)

E4 = Figure("E4", ("y", "x", "yp", "xp"), _arcs("y>x x>y xp>yp yp>xp x>yp xp>y"))

F4 = Figure("F4", ("a", "b", "c", "d"), _arcs("a>b b>a c>d d>c b>c a>d"), "d", _arcs("a>b c>d b>c"), "b", _arcs("b>a d>c a>d"))

SIX = ("a1", "b1", "c1", "a2", "b2", "c2")
TWO_CYCLES = " a1>a2 a2>a1 b1>b2 b2>b1 c1>c2 c2>c1"

# Co-bipartite on two 3-cycles with three 2-cycles between them
SIX_VERTEX = (
    Figure(
        "6vertex-left",
        SIX,
        _arcs("a1>b1 b1>c1 c1>a1 a2>b2 b2>c2 c2>a2" + TWO_CYCLES),
        "c2",
        _arcs("a1>b1 b2>c2 b1>b2 a2>a1 c1>a1"),
        "a1",
        _arcs("a2>b2 b1>c1 a1>a2 c1>c2 b2>b1"),
    ),
    Figure(
        "6vertex-right",
        SIX,
        _arcs("a1>b1 b1>c1 c1>a1 b2>a2 c2>b2 a2>c2" + TWO_CYCLES),
        "c2",
        _arcs("a1>b1 b1>c1 b2>a2 c1>c2 a2>a1"),
        "a1",
        _arcs("c2>b2 a2>c2 a1>a2 b2>b1 c2>c1"),
    ),
)

# Co-bipartite of order six with no 2-cycle and a transitive side
ORDER_SIX = (
    Figure(
        "order6-1",
        SIX,
        _arcs("a1>b1 b1>c1 a1>c1 a2>b2 b2>c2 a2>c2 c1>a2 c1>b2 b1>a2 c2>a1 c2>b1 b2>a1"),
        "c2",
        _arcs("a1>b1 b1>c1 c1>a2 a2>b2 b2>c2"),
        "a2",
        _arcs("a1>c1 a2>c2 c1>b2 c2>a1 c2>b1"),
    ),
    Figure(
        "order6-2",
        SIX,
        _arcs("a1>b1 b1>c1 a1>c1 a2>b2 b2>c2 c2>a2 c1>a2 c1>b2 a2>b1 c2>a1 b1>c2 b2>a1"),
        "c2",
        _arcs("a1>b1 b1>c1 c1>a2 a2>b2 b2>c2"),
        "c2",
        _arcs("a1>c1 c2>a2 c1>b2 a2>b1 c2>a1"),
    ),
    Figure(
        "order6-3",
        SIX,
        _arcs("a1>b1 b1>c1 a1>c1 b2>a2 c2>b2 a2>c2 c1>a2 c1>b2 a2>b1 c2>a1 b1>c2 b2>a1"),
        "a2",
        _arcs("a1>b1 b1>c1 c1>a2 b2>a2 c2>b2"),
        "a2",
        _arcs("a1>c1 a2>c2 c1>b2 a2>b1 c2>a1"),
    ),
)

# Six vertices, independent set {x1, x2, x3}: only the arcs of a good pair are drawn
XY = ("x1", "x2", "x3", "y1", "y2", "y3")
_N6_PRIME_IN = "y3>x1 y2>x3 x3>y1 y1>x1 x2>y2"
_N6_PRIME_OUT = "x1>y2 x2>y3 x1>y1 y2>x2 y3>x3"
_N6_DOUBLE_IN = "y1>x1 x1>y2 y3>x3 x2>y2 x3>y1"
_N6_DOUBLE_OUT = "y3>x1 y2>x3 x1>y1 y2>x2 x3>y3"
SIX_OK = (
    Figure("n6-prime", XY, _arcs(f"{_N6_PRIME_IN} {_N6_PRIME_OUT}"), "x1", _arcs(_N6_PRIME_IN), "x1", _arcs(_N6_PRIME_OUT)),
    Figure(
        "n6-double-prime", XY, _arcs(f"{_N6_DOUBLE_IN} {_N6_DOUBLE_OUT}"), "y2", _arcs(_N6_DOUBLE_IN), "y2", _arcs(_N6_DOUBLE_OUT)
    ),
)

ALL_FIGURES = {
    figure.name: figure
    for figure in (ST4, *FOUR_VERTEX_R_PAIRS, E4, F4, *SIX_VERTEX, *ORDER_SIX, *SIX_OK)
}
