"""Tests for branching validation and the exhaustive oracle."""

import pytest

from goodpairs.analysis import NotSemicomplete
from goodpairs.branchings import (
    Branching,
    BudgetExceeded,
    CertificateKind,
    GoodPair,
    OracleCallCounter,
    Orientation,
    RootCannotReachAll,
    enumerate_out_branchings,
    is_4_exception,
    is_exception,
    oracle_good_pair,
    validate_branching,
    validate_good_pair,
)
from goodpairs.budget import Budget
from goodpairs.digraph import build
from goodpairs.figures import F4, SIX_VERTEX, ST4_GOOD
from tests.fixtures.digraphs import figure_pair


def directed_cycle(n):
    return build(n, [(i, (i + 1) % n) for i in range(n)])


class TestValidateBranching:
    """Tests for spanning branching validation."""

    def test_st4_drawn_in_branching(self):
        d, pair = figure_pair(ST4_GOOD[2])

        assert pair.in_root == d.vertex("d")
        assert validate_branching(d, pair.in_branching)

    def test_missing_vertex(self, st4):
        b = Branching.of(Orientation.OUT, 0, [(0, 1), (1, 2)])

        verdict = validate_branching(st4, b)

        assert not verdict
        assert "not spanning" in verdict.reason

    def test_two_cycle_out_branching(self, two_cycle):
        assert validate_branching(two_cycle, Branching.of(Orientation.OUT, 0, [(0, 1)]))

    def test_wrong_root(self, two_cycle):
        verdict = validate_branching(two_cycle, Branching.of(Orientation.OUT, 0, [(0, 1)]), root=1)

        assert not verdict
        assert "expected 1" in verdict.reason

    def test_arc_not_in_digraph(self, st4):
        b = Branching.of(Orientation.IN, 0, [(1, 0), (2, 1), (3, 2)])

        assert "not in the digraph" in validate_branching(st4, b).reason

    def test_cycle_detected(self):
        d = build(3, [(0, 1), (1, 2), (2, 1), (1, 0)])
        b = Branching.of(Orientation.OUT, 0, [(1, 2), (2, 1)])

        assert not validate_branching(d, b)


class TestValidateGoodPair:
    """Tests for good pair validation."""

    def test_f4_drawn_pair(self):
        d, pair = figure_pair(F4)

        assert validate_good_pair(d, pair)
        assert validate_good_pair(d, pair, root_in=d.vertex("d"), root_out=d.vertex("b"))

    def test_six_vertex_drawn_pair(self):
        d, pair = figure_pair(SIX_VERTEX[0])

        assert validate_good_pair(d, pair)

    def test_shared_arc(self, two_cycle):
        pair = GoodPair.of(1, [(0, 1)], 0, [(0, 1)])

        verdict = validate_good_pair(two_cycle, pair)

        assert not verdict
        assert "used by both" in verdict.reason

    def test_parallel_copies_may_be_shared(self):
        d = build(2, [(0, 1), (0, 1), (1, 0)], multi=True)

        assert validate_good_pair(d, GoodPair.of(1, [(0, 1)], 0, [(0, 1)]))

    def test_swapped_orientations(self, two_cycle):
        out = Branching.of(Orientation.OUT, 0, [(0, 1)])

        assert not validate_good_pair(two_cycle, GoodPair(out, out))


class TestEnumerateOutBranchings:
    """Tests for out-branching enumeration."""

    def test_directed_cycle_has_one(self):
        assert len(list(enumerate_out_branchings(directed_cycle(5), 2))) == 1

    def test_two_cycle(self, two_cycle):
        assert [b.arcs for b in enumerate_out_branchings(two_cycle, 0)] == [((0, 1),)]

    def test_st4_rooted_at_a(self, st4):
        branchings = list(enumerate_out_branchings(st4, st4.vertex("a")))

        assert len(branchings) == 3
        assert len({b.arcs for b in branchings}) == 3
        assert all(validate_branching(st4, b) for b in branchings)

    def test_unreachable_vertex(self):
        with pytest.raises(RootCannotReachAll):
            list(enumerate_out_branchings(build(3, [(0, 1), (1, 2)]), 2))


class TestOracle:
    """Tests for the exhaustive good-pair oracle."""

    def test_e4_has_no_pair(self, e4):
        cert = oracle_good_pair(e4)

        assert cert.kind is CertificateKind.EXHAUSTED_SEARCH
        assert not cert.found

    def test_f4_has_pair(self, f4):
        cert = oracle_good_pair(f4)

        assert cert.found
        assert validate_good_pair(f4, cert.pair)

    def test_w_rooted(self, w):
        cert = oracle_good_pair(w, root_in=w.vertex("c1"), root_out=w.vertex("c2"))

        assert not cert.found
        assert cert.statistics.out_branchings > 0

    def test_w_unrooted(self, w):
        cert = oracle_good_pair(w)

        assert cert.found
        assert validate_good_pair(w, cert.pair)

    def test_h4_has_no_pair(self, h4):
        assert not oracle_good_pair(h4).found

    @pytest.mark.slow
    def test_h4_exhausted_without_limits(self, h4):
        cert = oracle_good_pair(h4, budget=Budget.unlimited())

        assert not cert.found
        assert cert.kind is CertificateKind.EXHAUSTED_SEARCH
        assert cert.statistics.roots_tried == h4.n
        assert 0 < cert.statistics.out_branchings <= h4.n * 2 ** (h4.n - 1)
        assert cert.statistics.reason == ""

    def test_badmulti_same_root(self, badmulti):
        s = badmulti.vertex("s")

        assert not oracle_good_pair(badmulti, root_in=s, root_out=s).found

    def test_roots_respected(self, st4):
        a, b = st4.vertex("a"), st4.vertex("b")

        assert not oracle_good_pair(st4, root_in=a).found
        cert = oracle_good_pair(st4, root_in=b)
        assert cert.found
        assert validate_good_pair(st4, cert.pair, root_in=b)

    def test_no_admissible_root(self):
        cert = oracle_good_pair(build(3, [(0, 1), (1, 2)]), root_in=0)

        assert not cert.found
        assert cert.statistics.reason == "no admissible root"

    def test_order_limit(self, settings, e4):
        settings.BRANCHPAIR_ORACLE_MAX_VERTICES = 3

        with pytest.raises(BudgetExceeded) as excinfo:
            oracle_good_pair(e4)

        assert excinfo.value.statistics.reason == "order 4 above oracle limit 3"

    def test_enumeration_cap(self, settings, h4):
        settings.BRANCHPAIR_ORACLE_MAX_BRANCHINGS = 0

        with pytest.raises(BudgetExceeded) as excinfo:
            oracle_good_pair(h4)

        assert excinfo.value.statistics.reason == "enumeration cap"

    def test_unlimited_budget(self, f4):
        assert oracle_good_pair(f4, budget=Budget.unlimited()).found

    def test_transcript(self, e4):
        lines = oracle_good_pair(e4).to_transcript(e4)

        assert lines[0] == "CERT kind=exhausted-search root_in=* root_out=*"
        assert lines[-1].startswith("STAT out_branchings=")

    def test_pair_transcript_uses_labels(self, w):
        lines = oracle_good_pair(w).to_transcript(w)

        assert lines[1].startswith("IN root=")
        assert lines[2].startswith("OUT root=")
        assert ">" in lines[1]


class TestExceptions:
    """Tests for exception and 4-exception recognition."""

    def test_st4_at_a(self, st4):
        a, c, d = st4.vertex("a"), st4.vertex("c"), st4.vertex("d")

        assert is_exception(st4, a) == (d, c)
        assert is_4_exception(st4, a)

    def test_st4_at_b(self, st4):
        b = st4.vertex("b")

        assert is_exception(st4, b) is None
        assert not is_4_exception(st4, b)

    def test_optional_arcs_keep_4_exception(self, st4):
        d = build(4, [*st4.pairs(), (st4.vertex("d"), st4.vertex("c"))])

        assert is_4_exception(d, st4.vertex("a"))

    def test_needs_semicomplete(self, e4):
        with pytest.raises(NotSemicomplete):
            is_exception(e4, 0)


class TestOracleCallCounter:
    """Tests for oracle call bookkeeping."""

    def test_counts_outcomes(self, e4, f4):
        counter = OracleCallCounter()

        counter.record(oracle_good_pair(e4))
        counter.record(oracle_good_pair(f4))

        assert counter.calls == 2
        assert counter.found == 1
        assert counter.exhausted == 1
        assert counter.by_kind == {"exhausted-search": 1, "pair-found": 1}
