"""Tests for small-digraph enumeration."""

from itertools import permutations

import pytest

from goodpairs.budget import Budget
from goodpairs.harness.enumeration import (
    EnumerationTask,
    Filters,
    Mode,
    Predicate,
    canonical_form,
    generate,
    generate_rows,
    is_canonical,
    merge_summaries,
    rows_to_digraph,
    run_enumeration,
)
from goodpairs.harness.reports import InvalidTask


class TestGeneration:
    """Tests for row-by-row matrix generation."""

    def test_all_matrices_on_three_vertices(self):
        assert sum(1 for _ in generate_rows(3)) == 64

    def test_degree_bound_prunes(self):
        assert list(generate_rows(3, bound=2)) == [(0b110, 0b101, 0b011)]

    @pytest.mark.parametrize(("n", "classes"), [(1, 1), (2, 3), (3, 16), (4, 218)])
    def test_isomorphism_classes(self, n, classes):
        task = EnumerationTask(n, mode=Mode.CANONICAL)

        assert sum(1 for _ in generate(task)) == classes

    def test_shards_cover_the_run(self):
        counts = [sum(1 for _ in generate_rows(3, shard=shard, shards=3)) for shard in range(3)]

        assert sum(counts) == 64
        assert all(counts)

    def test_rows_to_digraph(self):
        d = rows_to_digraph(3, (0b010, 0b100, 0b001))

        assert d.pairs() == [(0, 1), (1, 2), (2, 0)]


class TestCanonicalForm:
    """Tests for the canonical labelling."""

    def test_relabelling_invariant(self):
        # 0 -> 1 -> 2 and 0 -> 2, relabelled by swapping 0 and 2
        assert canonical_form(3, (0b110, 0b100, 0b000)) == canonical_form(3, (0b000, 0b001, 0b011))

    def test_one_labelling_per_class(self):
        arcs = [(0, 1), (0, 2), (1, 2)]
        labellings = set()
        for order in permutations(range(3)):
            rows = [0, 0, 0]
            for t, h in arcs:
                rows[order[t]] |= 1 << order[h]
            labellings.add(tuple(rows))

        assert len(labellings) == 6
        assert sum(1 for rows in labellings if is_canonical(3, rows)) == 1


class TestFilters:
    """Tests for structural filters."""

    def test_describe(self):
        assert Filters().describe() == "none"
        assert Filters(lambda_min=2, alpha_max=2).describe() == "lambda_min=2,alpha_max=2"

    def test_degree_bound(self):
        assert Filters(lambda_min=1, delta0_min=2).degree_bound == 2

    def test_accepts(self, e4, st4):
        assert Filters(alpha_eq=2).accepts(e4)
        assert not Filters(alpha_eq=2).accepts(st4)
        assert not Filters(lambda_min=2).accepts(e4)
        assert Filters(arcs_min=6).accepts(st4)


class TestTaskValidation:
    """Tests for the limits of each mode."""

    def test_exhaustive_limit(self):
        with pytest.raises(InvalidTask, match="n <= 5"):
            EnumerationTask(6).validate()

    def test_canonical_limit(self):
        with pytest.raises(InvalidTask, match="n <= 6"):
            EnumerationTask(7, mode=Mode.CANONICAL).validate()

    def test_sampled_needs_a_count(self):
        with pytest.raises(InvalidTask, match="positive instance count"):
            EnumerationTask(9, mode=Mode.SAMPLED).validate()

    def test_shard_range(self):
        with pytest.raises(InvalidTask, match="shard 2"):
            EnumerationTask(3, shard=2, shards=2).validate()


class TestRunEnumeration:
    """Tests for enumeration with the oracle predicate."""

    def test_complete_digraph_only(self):
        summary = run_enumeration(EnumerationTask(3, Filters(lambda_min=2)))

        assert summary["generated"] == 1
        assert summary["qualifying"] == 1
        assert summary["failures"] == 0
        assert summary["oracle_calls"] == 1

    def test_two_arc_strong_order_four(self):
        summary = run_enumeration(EnumerationTask(4, Filters(lambda_min=2), Mode.CANONICAL))

        assert summary["qualifying"] > 0
        assert summary["failures"] == 0

    def test_strong_order_four_has_failures(self):
        summary = run_enumeration(EnumerationTask(4, Filters(lambda_min=1), Mode.CANONICAL), stop_on_failure=True)

        assert summary["failures"] == 1
        assert summary["counterexamples"][0][0].startswith("CERT counterexample n=4")

    def test_same_root_predicate(self):
        task = EnumerationTask(3, Filters(lambda_min=2), predicate=Predicate.HAS_GOOD_PAIR_ALL_ROOTS_S)

        summary = run_enumeration(task)

        assert summary["failures"] == 0
        assert summary["oracle_calls"] == 3

    def test_sampled(self):
        summary = run_enumeration(EnumerationTask(5, mode=Mode.SAMPLED, count=6, seed=2))

        assert summary["generated"] == 6

    def test_expired_budget(self):
        summary = run_enumeration(EnumerationTask(3), budget=Budget(seconds=-1))

        assert summary["budget_exceeded"]
        assert summary["generated"] == 0

    def test_merge_shards(self):
        task = EnumerationTask(3, Filters(arcs_min=3))

        merged = merge_summaries([run_enumeration(task.for_shard(shard, 2)) for shard in (1, 0)])
        whole = run_enumeration(task)

        assert merged["generated"] == whole["generated"] == 64
        assert merged["qualifying"] == whole["qualifying"]
        assert merged["failures"] == whole["failures"]
        assert merged["shards"] == 2
