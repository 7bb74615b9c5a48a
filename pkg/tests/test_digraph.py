"""Tests for the digraph representation and its serializations."""

from pathlib import Path

import pytest

from goodpairs.digraph import (
    ArcAbsent,
    ArcRole,
    DigraphError,
    DuplicateArcInSimpleDigraph,
    EmptySubset,
    InconsistentHeader,
    LoopArc,
    TextFormatError,
    VertexOutOfRange,
    add_arc,
    build,
    build_labeled,
    emit_dot,
    emit_text,
    induced,
    label_arcs,
    parse_text,
    remove_arc,
    remove_arcs,
    reverse,
    union,
)
from goodpairs.figures import F4
from tests.fixtures.digraphs import (
    BAD_ARC_TEXT,
    COMMENTED_TEXT,
    OUT_OF_RANGE_TEXT,
    TWO_CYCLE_TEXT,
    figure_pair,
)

FIXTURES = Path(__file__).parent / "fixtures"


class TestBuild:
    """Tests for building digraphs from arc lists."""

    def test_two_cycle(self, two_cycle):
        assert two_cycle.n == 2
        assert two_cycle.arc_count == 2
        assert two_cycle.out_adj == ((1,), (0,))
        assert two_cycle.in_adj == ((1,), (0,))

    def test_arcs_sorted(self):
        d = build(3, [(2, 0), (0, 2), (0, 1)])

        assert [arc.pair for arc in d.arcs] == [(0, 1), (0, 2), (2, 0)]

    def test_e4_has_six_arcs(self, e4):
        assert e4.arc_count == 6
        assert sum(e4.out_degree(v) for v in e4.vertices) == sum(e4.in_degree(v) for v in e4.vertices) == 6

    def test_loop_rejected(self):
        with pytest.raises(LoopArc):
            build(3, [(0, 0)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            build(2, [(0, 2)])

    def test_duplicate_in_simple_digraph(self):
        with pytest.raises(DuplicateArcInSimpleDigraph):
            build(2, [(0, 1), (0, 1)])

    def test_multidigraph_counts_multiplicity(self):
        d = build(2, [(0, 1), (0, 1), (1, 0)], multi=True)

        assert d.is_multi
        assert d.multiplicity(0, 1) == 2
        assert d.arc_count == 3
        assert d.out_degree(0) == 2
        assert d.occurrences() == [(0, 1), (0, 1), (1, 0)]

    def test_label_count_must_match(self):
        with pytest.raises(DigraphError, match="labels"):
            build(2, [(0, 1)], labels=["a"])

    def test_vertex_by_label_or_index(self, e4):
        assert e4.vertex("yp") == 2
        assert e4.vertex("3") == 3
        with pytest.raises(VertexOutOfRange):
            e4.vertex("zz")
        with pytest.raises(VertexOutOfRange):
            e4.vertex("7")


class TestInduced:
    """Tests for induced subdigraphs."""

    def test_two_cycle_of_e4(self, e4):
        sub = induced(e4, {e4.vertex("y"), e4.vertex("x")})

        assert sub.n == 2
        assert sub.pairs() == [(0, 1), (1, 0)]
        assert sub.labels == ("y", "x")
        assert sub.back_map == (0, 1)

    def test_whole_vertex_set_is_identity(self, w):
        assert induced(w, w.vertices) == w

    def test_back_map_and_arc_count(self, h4):
        chosen = [h4.vertex(name) for name in ("a1", "a2", "b1", "b2")]
        sub = induced(h4, chosen)

        assert sub.back_map == tuple(sorted(chosen))
        expected = sum(1 for t, h in h4.pairs() if t in chosen and h in chosen)
        assert sub.arc_count == expected == 6
        assert [sub.original(v) for v in sub.vertices] == sorted(chosen)

    def test_empty_subset(self, e4):
        with pytest.raises(EmptySubset):
            induced(e4, [])


class TestReverse:
    """Tests for arc reversal."""

    def test_two_cycle_is_symmetric(self, two_cycle):
        assert reverse(two_cycle) == two_cycle

    def test_path(self):
        assert reverse(build(3, [(0, 1), (1, 2)])).pairs() == [(1, 0), (2, 1)]

    def test_st4(self, st4):
        a, b, c, d = (st4.vertex(name) for name in "abcd")

        assert set(reverse(st4).pairs()) == {(b, a), (c, b), (d, c), (a, d), (c, a), (b, d)}

    def test_involution_swaps_degrees(self, w):
        rev = reverse(w)

        assert reverse(rev) == w
        assert all(rev.out_degree(v) == w.in_degree(v) for v in w.vertices)


class TestMutation:
    """Tests for arc addition and removal."""

    def test_remove_hamiltonian_path(self):
        complete = build(3, [(t, h) for t in range(3) for h in range(3) if t != h])

        rest = remove_arcs(complete, [(0, 1), (1, 2)])

        assert rest.arc_count == 4
        assert not rest.has_arc(0, 1)
        assert complete.has_arc(0, 1)

    def test_add_then_remove(self, e4):
        assert remove_arc(add_arc(e4, 0, 2), 0, 2) == e4

    def test_remove_absent_arc(self, e4):
        with pytest.raises(ArcAbsent):
            remove_arc(e4, 0, 2)

    def test_add_loop(self, e4):
        with pytest.raises(LoopArc):
            add_arc(e4, 1, 1)

    def test_add_duplicate_to_simple(self, e4):
        with pytest.raises(DuplicateArcInSimpleDigraph):
            add_arc(e4, 0, 1)

    def test_remove_one_parallel_copy(self, badmulti):
        s, a = badmulti.vertex("s"), badmulti.vertex("a")

        rest = remove_arc(badmulti, s, a)

        assert rest.multiplicity(s, a) == 1
        assert rest.arc_count == badmulti.arc_count - 1


class TestUnion:
    """Tests for disjoint unions with identification."""

    def test_prefixes_and_extra_arcs(self, two_cycle):
        d = union([("p.", two_cycle), ("q.", two_cycle)], extra_arcs=[("p.0", "q.0")])

        assert d.labels == ("p.0", "p.1", "q.0", "q.1")
        assert d.arc_count == 5
        assert d.has_arc(d.vertex("p.0"), d.vertex("q.0"))

    def test_identify_merges_vertices(self, two_cycle):
        d = union([("p.", two_cycle), ("q.", two_cycle)], identify=[["p.0", "q.0"]])

        assert d.n == 3
        assert d.labels == ("p.0", "p.1", "q.1")
        assert d.in_degree(d.vertex("p.0")) == 2

    def test_identify_creating_loop(self):
        arc = build_labeled(["u", "v"], [("u", "v")])

        with pytest.raises(LoopArc):
            union([("", arc)], identify=[["u", "v"]])


class TestTextFormat:
    """Tests for the line-oriented text format."""

    def test_emit_two_cycle(self, two_cycle):
        assert emit_text(two_cycle) == TWO_CYCLE_TEXT

    def test_round_trip_keeps_arcs_and_labels(self, w):
        parsed = parse_text(emit_text(w))

        assert parsed == w
        assert parsed.labels == w.labels

    def test_round_trip_multidigraph(self, badmulti):
        text = emit_text(badmulti)

        assert text.startswith("multidigraph\n6\n")
        assert parse_text(text) == badmulti

    def test_bytes_input(self):
        assert parse_text(TWO_CYCLE_TEXT.encode()).arc_count == 2

    def test_comments_and_blank_lines_ignored(self):
        d = parse_text(COMMENTED_TEXT)

        assert d.pairs() == [(0, 1), (1, 2), (2, 0)]
        assert d.labels is None

    def test_fixture_files(self):
        e4 = parse_text((FIXTURES / "e4.txt").read_text())
        f4 = parse_text((FIXTURES / "f4.txt").read_bytes())

        assert e4.labels == ("y", "x", "yp", "xp")
        assert e4.arc_count == 6
        assert f4 == F4.host()

    def test_vertex_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            parse_text(OUT_OF_RANGE_TEXT)

    def test_invalid_utf8(self):
        with pytest.raises(TextFormatError, match="invalid UTF-8 at byte 13") as excinfo:
            parse_text(b"digraph\n2\n0 1\xff\n1 0\n")

        assert excinfo.value.line == 3

    def test_bad_arc_line(self):
        with pytest.raises(TextFormatError, match="line 4") as excinfo:
            parse_text(BAD_ARC_TEXT)

        assert excinfo.value.line == 4

    def test_unknown_header(self):
        with pytest.raises(InconsistentHeader):
            parse_text("graph\n2\n0 1\n")

    def test_missing_vertex_count(self):
        with pytest.raises(InconsistentHeader):
            parse_text("digraph\n")


class TestDot:
    """Tests for DOT export and arc labelling."""

    def test_pair_colours(self):
        d, pair = figure_pair(F4)

        dot = emit_dot(d, highlight=pair)

        assert dot.startswith("digraph D {")
        assert dot.count("color=red") == 3
        assert dot.count("color=blue") == 3
        assert "color=black" not in dot

    def test_plain_digraph_is_black(self, two_cycle):
        dot = emit_dot(two_cycle)

        assert dot.count("color=black") == 2
        assert '0 [label="0"];' in dot

    def test_parallel_copies_labelled_separately(self, badmulti):
        s, a = badmulti.vertex("s"), badmulti.vertex("a")

        labeling = label_arcs(badmulti, in_arcs=[(s, a)], out_arcs=[(s, a)])

        assert labeling[(s, a, 0)] is ArcRole.IN_BRANCH
        assert labeling[(s, a, 1)] is ArcRole.OUT_BRANCH
        assert len(labeling) == badmulti.arc_count

    def test_overused_arc(self, two_cycle):
        with pytest.raises(ArcAbsent):
            label_arcs(two_cycle, in_arcs=[(0, 1)], out_arcs=[(0, 1)])
