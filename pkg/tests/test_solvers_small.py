"""Tests for the small-digraph solver and the extension lemmas."""

import pytest

from goodpairs.branchings import CertificateKind, GoodPair, validate_good_pair
from goodpairs.digraph import build
from goodpairs.solvers.base import PreconditionViolated, two_cycle_pair
from goodpairs.solvers.small import (
    extend_by_buffer,
    extend_by_three,
    is_e4,
    small_good_pair,
    three_vertex_pair,
)


def complete(n):
    return build(n, [(t, h) for t in range(n) for h in range(n) if t != h])


class TestThreeVertexPair:
    """Tests for the path split on three vertices."""

    def test_complete(self):
        d = complete(3)

        assert validate_good_pair(d, three_vertex_pair(d))

    def test_two_cycle_with_a_tail(self):
        d = build(3, [(0, 1), (1, 0), (1, 2), (2, 0)])

        assert validate_good_pair(d, three_vertex_pair(d))

    def test_too_few_arcs(self):
        with pytest.raises(PreconditionViolated, match="at least 4 arcs"):
            three_vertex_pair(build(3, [(0, 1), (1, 2), (2, 0)]))


class TestExtensions:
    """Tests for growing a pair of a subdigraph."""

    def test_buffer_vertex(self):
        d = complete(4)
        sub_pair = GoodPair.of(0, [(1, 0), (2, 0)], 0, [(0, 1), (0, 2)])

        pair = extend_by_buffer(d, {3}, sub_pair)

        assert validate_good_pair(d, pair)
        assert (3, 0) in pair.in_branching.arcs
        assert (0, 3) in pair.out_branching.arcs

    def test_buffer_vertex_without_out_neighbour(self):
        d = build(3, [(0, 1), (1, 0), (0, 2)])

        with pytest.raises(PreconditionViolated, match="lacks"):
            extend_by_buffer(d, {2}, two_cycle_pair(0, 1))

    def test_three_from_a_two_cycle(self):
        d = complete(5)

        assert validate_good_pair(d, extend_by_three(d, two_cycle_pair(0, 1)))


class TestSmallGoodPair:
    """Tests for the exact answer on at most six vertices."""

    def test_single_vertex(self):
        cert = small_good_pair(build(1, []))

        assert cert.found
        assert cert.route == "trivial"

    def test_two_cycle(self, two_cycle):
        cert = small_good_pair(two_cycle)

        assert cert.route == "two-cycle"
        assert validate_good_pair(two_cycle, cert.pair)

    def test_three_vertices(self):
        d = complete(3)

        cert = small_good_pair(d)

        assert cert.route == "path-split"
        assert validate_good_pair(d, cert.pair)

    def test_e4_has_none(self, e4):
        cert = small_good_pair(e4)

        assert cert.route == "e4"
        assert cert.kind is CertificateKind.EXHAUSTED_SEARCH

    def test_f4(self, f4):
        cert = small_good_pair(f4)

        assert cert.found
        assert validate_good_pair(f4, cert.pair)

    def test_semicomplete(self):
        d = complete(5)

        cert = small_good_pair(d)

        assert cert.route == "semicomplete"
        assert validate_good_pair(d, cert.pair)

    def test_path_falls_through_to_the_oracle(self):
        cert = small_good_pair(build(3, [(0, 1), (1, 2)]))

        assert cert.route == "oracle"
        assert not cert.found

    def test_too_many_vertices(self):
        with pytest.raises(PreconditionViolated, match="at most 6"):
            small_good_pair(build(7, []))


class TestRecognition:
    """Tests for recognising E4 up to isomorphism."""

    def test_e4(self, e4):
        assert is_e4(e4)

    def test_relabelled_e4(self, e4):
        swap = {0: 3, 1: 2, 2: 1, 3: 0}

        assert is_e4(build(4, [(swap[t], swap[h]) for t, h in e4.pairs()]))

    def test_others(self, f4, st4):
        assert not is_e4(f4)
        assert not is_e4(st4)
