"""Tests for the semicomplete constructions."""

import pytest

from goodpairs.branchings import CertificateKind, GoodPair, oracle_good_pair, validate_good_pair
from goodpairs.digraph import build
from goodpairs.families import four_exception, strong_semicomplete
from goodpairs.figures import D_PLUS, TT4
from goodpairs.solvers.base import PreconditionViolated
from goodpairs.solvers.semicomplete import (
    four_vertex_r_pair,
    semicomplete_good_pair,
    semicomplete_good_r_pair,
    semicomplete_nonstrong_pair,
    semicomplete_util_extend,
)


def complete(n):
    return build(n, [(t, h) for t in range(n) for h in range(n) if t != h])


# 0 has the single in-neighbour 1, whose single in-neighbour is 2
EXCEPTION_AT_0 = build(
    5,
    [(1, 0), (0, 2), (0, 3), (0, 4), (2, 1), (1, 3), (1, 4), (3, 2), (4, 2), (3, 4)],
)


class TestNonStrong:
    """Tests for the construction on non-strong semicomplete digraphs."""

    def test_transitive_tournament(self):
        d = TT4.host()
        r, q = d.vertex("a4"), d.vertex("a1")

        pair = semicomplete_nonstrong_pair(d, r, q)

        assert validate_good_pair(d, pair, root_in=r, root_out=q)

    def test_dominated_cycle(self):
        d = D_PLUS.host()

        pair = semicomplete_nonstrong_pair(d, d.vertex("a1"), d.vertex("b"))

        assert validate_good_pair(d, pair, root_in=d.vertex("a1"), root_out=d.vertex("b"))

    def test_strong_digraph_rejected(self, st4):
        with pytest.raises(PreconditionViolated, match="strong"):
            semicomplete_nonstrong_pair(st4, 0, 1)

    def test_root_must_be_in_generator(self):
        d = TT4.host()

        with pytest.raises(PreconditionViolated, match="in-generator"):
            semicomplete_nonstrong_pair(d, d.vertex("a1"), d.vertex("a1"))


class TestUtilExtend:
    """Tests for growing an r-pair onto a semicomplete digraph."""

    def test_from_a_two_cycle(self):
        d = complete(4)
        sub_pair = GoodPair.of(0, [(1, 0)], 0, [(0, 1)])

        pair = semicomplete_util_extend(d, 0, sub_pair)

        assert validate_good_pair(d, pair, root_in=0)
        assert pair.out_root == 3

    def test_root_mismatch(self):
        with pytest.raises(PreconditionViolated, match="rooted at 0"):
            semicomplete_util_extend(complete(4), 1, GoodPair.of(0, [(1, 0)], 0, [(0, 1)]))

    def test_single_vertex_seed(self):
        with pytest.raises(PreconditionViolated, match="at least 2"):
            semicomplete_util_extend(complete(4), 0, GoodPair.of(0, [], 0, []))


class TestGoodRPair:
    """Tests for good r-pairs and the exception certificates."""

    def test_st4_at_a_is_a_four_exception(self, st4):
        a, c, d = st4.vertex("a"), st4.vertex("c"), st4.vertex("d")

        cert = semicomplete_good_r_pair(st4, a)

        assert cert.kind is CertificateKind.FOUR_EXCEPTION
        assert cert.witness == (a, d, c)
        assert not cert.found

    @pytest.mark.parametrize("name", ["b", "c", "d"])
    def test_st4_other_roots(self, st4, name):
        r = st4.vertex(name)

        cert = semicomplete_good_r_pair(st4, r)

        assert cert.found
        assert validate_good_pair(st4, cert.pair, root_in=r)

    def test_exception_on_five_vertices(self):
        cert = semicomplete_good_r_pair(EXCEPTION_AT_0, 0)

        assert cert.kind is CertificateKind.EXCEPTION
        assert cert.witness == (0, 1, 2)
        assert not oracle_good_pair(EXCEPTION_AT_0, root_in=0).found

    def test_other_roots_of_the_exception(self):
        cert = semicomplete_good_r_pair(EXCEPTION_AT_0, 3)

        assert cert.found
        assert validate_good_pair(EXCEPTION_AT_0, cert.pair, root_in=3)

    @pytest.mark.parametrize("variant", ["dc", "cb", "both"])
    def test_optional_arcs_stay_exceptions(self, variant):
        d = four_exception(variant)

        assert semicomplete_good_r_pair(d, d.vertex("a")).kind is CertificateKind.FOUR_EXCEPTION

    def test_four_vertex_r_pair(self, st4):
        b = st4.vertex("b")

        assert validate_good_pair(st4, four_vertex_r_pair(st4, b), root_in=b)

    def test_not_semicomplete(self, e4):
        with pytest.raises(PreconditionViolated, match="semicomplete"):
            semicomplete_good_r_pair(e4, 0)

    def test_too_small(self):
        with pytest.raises(PreconditionViolated, match="at least 4"):
            semicomplete_good_r_pair(complete(3), 0)


class TestGoodPair:
    """Tests for unrooted good pairs of semicomplete digraphs."""

    @pytest.mark.parametrize("m", [4, 5, 7, 9])
    def test_strong_semicomplete(self, m):
        d = strong_semicomplete(m)

        assert validate_good_pair(d, semicomplete_good_pair(d))

    def test_complete(self):
        d = complete(6)

        assert validate_good_pair(d, semicomplete_good_pair(d))

    def test_non_strong(self):
        d = TT4.host()

        assert validate_good_pair(d, semicomplete_good_pair(d))
