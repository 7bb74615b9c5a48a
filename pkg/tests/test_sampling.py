"""Tests for seeded instance generation."""

from goodpairs.analysis import co_bipartition, independence_number, is_semicomplete
from goodpairs.budget import Budget
from goodpairs.harness.sampling import (
    instance_rng,
    is_alpha2_instance,
    random_cobipartite,
    random_digraph,
    random_odd_hole,
    random_semicomplete,
    sample,
)


class TestGenerators:
    """Tests for the random digraph generators."""

    def test_instance_rng_is_reproducible(self):
        assert instance_rng(7, 3).random() == instance_rng(7, 3).random()
        assert instance_rng(7, 3).random() != instance_rng(7, 4).random()

    def test_random_digraph_density_extremes(self):
        assert random_digraph(instance_rng(1, 0), 5, density=0.0).arc_count == 0
        assert random_digraph(instance_rng(1, 0), 5, density=1.0).arc_count == 20

    def test_semicomplete(self):
        for index in range(10):
            assert is_semicomplete(random_semicomplete(instance_rng(2, index), 6))

    def test_tournament_without_two_cycles(self):
        d = random_semicomplete(instance_rng(2, 0), 6, two_cycle_rate=0.0)

        assert d.arc_count == 15

    def test_cobipartite(self):
        for index in range(10):
            assert co_bipartition(random_cobipartite(instance_rng(3, index), 7)) is not None

    def test_odd_hole_is_outside_the_easy_classes(self):
        for index in range(8):
            d = random_odd_hole(instance_rng(4, index), 7 + index % 3)

            assert independence_number(d)[0] <= 2
            assert not is_semicomplete(d)
            assert co_bipartition(d) is None


class TestSample:
    """Tests for rejection sampling and sharding."""

    def test_reproducible(self):
        first = [item.digraph for item in sample("semicomplete", (4, 6), seed=5, count=4)]
        second = [item.digraph for item in sample("semicomplete", (4, 6), seed=5, count=4)]

        assert first == second
        assert all(4 <= d.n <= 6 for d in first)

    def test_shards_partition_indices(self):
        even = [item.index for item in sample("digraph", (3, 3), 1, 6, start=0, step=2)]
        odd = [item.index for item in sample("digraph", (3, 3), 1, 6, start=1, step=2)]

        assert even == [0, 2, 4]
        assert odd == [1, 3, 5]

    def test_shard_draws_match_the_full_run(self):
        full = {item.index: item.digraph for item in sample("digraph", (3, 5), 9, 4)}
        shard = {item.index: item.digraph for item in sample("digraph", (3, 5), 9, 4, start=1, step=2)}

        assert shard == {index: full[index] for index in (1, 3)}

    def test_accept_filter(self):
        items = list(sample("alpha2", (5, 6), 4, 3, is_alpha2_instance))

        assert all(is_alpha2_instance(item.digraph) for item in items)
        assert all(item.attempts >= 1 for item in items)

    def test_rejecting_everything_skips_indices(self):
        assert list(sample("digraph", (3, 3), 1, 2, accept=lambda d: False)) == []

    def test_expired_budget_stops(self):
        assert list(sample("digraph", (3, 3), 1, 5, budget=Budget(seconds=-1))) == []
