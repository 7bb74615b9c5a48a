"""
Enumeration of small digraphs with a predicate checked by the oracle.

Adjacency matrices are generated row by row; a row is the out-neighbour
set of one vertex. Rows that cannot meet the degree bounds are pruned
before the next row is chosen. Canonical mode additionally keeps only
matrices equal to their canonical form, one per isomorphism class.
"""

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from itertools import permutations, product

from goodpairs.analysis import arc_connectivity, independence_number, min_semidegree
from goodpairs.branchings import BudgetExceeded, OracleCallCounter, oracle_good_pair
from goodpairs.digraph import build
from goodpairs.harness.reports import InvalidTask, counterexample_lines, merge_shards
from goodpairs.harness.sampling import instance_rng, random_digraph

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_VERTICES = 5
CANONICAL_MAX_VERTICES = 6


class Mode(StrEnum):
    EXHAUSTIVE = "exhaustive"
    CANONICAL = "canonical"
    SAMPLED = "sampled"


class Predicate(StrEnum):
    HAS_GOOD_PAIR = "has_good_pair"
    HAS_GOOD_PAIR_ALL_ROOTS_S = "has_good_pair_all_roots_s"


@dataclass(frozen=True)
class Filters:
    lambda_min: int | None = None
    delta0_min: int | None = None
    alpha_max: int | None = None
    alpha_eq: int | None = None
    arcs_min: int | None = None

    @property
    def degree_bound(self):
        """Lower bound on every in- and out-degree implied by the filters."""
        return max(self.lambda_min or 0, self.delta0_min or 0)

    def accepts(self, d):
        if self.arcs_min is not None and d.arc_count < self.arcs_min:
            return False
        if self.delta0_min is not None and min_semidegree(d) < self.delta0_min:
            return False
        if self.lambda_min and (d.n < 2 or arc_connectivity(d) < self.lambda_min):
            return False
        if self.alpha_max is not None or self.alpha_eq is not None:
            alpha, _ = independence_number(d)
            if self.alpha_max is not None and alpha > self.alpha_max:
                return False
            if self.alpha_eq is not None and alpha != self.alpha_eq:
                return False
        return True

    def describe(self):
        return ",".join(f"{key}={value}" for key, value in self.__dict__.items() if value is not None) or "none"


@dataclass(frozen=True)
class EnumerationTask:
    """
    What to enumerate.

    count and seed only apply to sampled mode; shard/shards split the
    row stream (or the sample indices) between workers.
    """

    n: int
    filters: Filters = field(default_factory=Filters)
    mode: Mode = Mode.EXHAUSTIVE
    predicate: Predicate = Predicate.HAS_GOOD_PAIR
    count: int = 0
    seed: int = 0
    shard: int = 0
    shards: int = 1

    def validate(self):
        if self.n < 1:
            raise InvalidTask(f"order must be positive, got {self.n}")
        if self.mode is Mode.EXHAUSTIVE and self.n > EXHAUSTIVE_MAX_VERTICES:
            raise InvalidTask(f"exhaustive mode is limited to n <= {EXHAUSTIVE_MAX_VERTICES}, got {self.n}")
        if self.mode is Mode.CANONICAL and self.n > CANONICAL_MAX_VERTICES:
            raise InvalidTask(f"canonical mode is limited to n <= {CANONICAL_MAX_VERTICES}, got {self.n}")
        if self.mode is Mode.SAMPLED and self.count < 1:
            raise InvalidTask("sampled mode needs a positive instance count")
        if not 0 <= self.shard < self.shards:
            raise InvalidTask(f"shard {self.shard} outside 0..{self.shards - 1}")
        return self

    def for_shard(self, shard, shards):
        return EnumerationTask(self.n, self.filters, self.mode, self.predicate, self.count, self.seed, shard, shards)


# Generation


def _row_choices(n, i, bound):
    """Out-neighbour masks of vertex i with at least bound members, largest first."""
    others = [v for v in range(n) if v != i]
    masks = []
    for chosen in product((1, 0), repeat=len(others)):
        mask = sum(1 << v for v, bit in zip(others, chosen, strict=True) if bit)
        if mask.bit_count() >= bound:
            masks.append(mask)
    return masks


def _in_degrees_reachable(n, rows, bound):
    """Every column can still reach bound in-arcs from the rows not yet chosen."""
    done = len(rows)
    for v in range(n):
        have = sum(1 for row in rows if row >> v & 1)
        remaining = n - done - (1 if v >= done else 0)
        if have + remaining < bound:
            return False
    return True


def generate_rows(n, bound=0, canonical=False, shard=0, shards=1):
    """
    Yield adjacency matrices as tuples of row masks.

    The choice index of the first row decides the shard. In canonical
    mode out-degrees are non-increasing down the rows.
    """
    choices = [_row_choices(n, i, bound) for i in range(n)]

    def extend(rows):
        if len(rows) == n:
            yield tuple(rows)
            return
        for mask in choices[len(rows)]:
            if canonical and rows and mask.bit_count() > rows[-1].bit_count():
                continue
            rows.append(mask)
            if _in_degrees_reachable(n, rows, bound):
                yield from extend(rows)
            rows.pop()

    for index, first in enumerate(choices[0]):
        if index % shards == shard:
            yield from extend([first])


def rows_to_digraph(n, rows):
    return build(n, [(t, h) for t in range(n) for h in range(n) if rows[t] >> h & 1])


def _matrix_key(n, rows, order):
    """Rows of the relabeled matrix, each encoded so integer order is lexicographic."""
    return tuple(
        sum(1 << (n - 1 - col) for col, h in enumerate(order) if rows[t] >> h & 1) for t in order
    )


def canonical_form(n, rows):
    """
    Lexicographically minimal relabeled matrix among the labelings with
    non-increasing out-degree.
    """
    degree = [row.bit_count() for row in rows]
    groups = {}
    for v in range(n):
        groups.setdefault(degree[v], []).append(v)
    ordered = [groups[k] for k in sorted(groups, reverse=True)]
    best = None
    for parts in product(*(permutations(group) for group in ordered)):
        order = [v for part in parts for v in part]
        key = _matrix_key(n, rows, order)
        if best is None or key < best:
            best = key
    return best


def is_canonical(n, rows):
    return _matrix_key(n, rows, list(range(n))) == canonical_form(n, rows)


def generate(task):
    """Yield the task's digraphs before filtering (sampled mode draws random ones)."""
    if task.mode is Mode.SAMPLED:
        for index in range(task.shard, task.count, task.shards):
            yield random_digraph(instance_rng(task.seed, index), task.n)
        return
    canonical = task.mode is Mode.CANONICAL
    for rows in generate_rows(task.n, task.filters.degree_bound, canonical, task.shard, task.shards):
        if canonical and not is_canonical(task.n, rows):
            continue
        yield rows_to_digraph(task.n, rows)


# Predicates


def _failing_certificate(d, predicate, budget, counter):
    """None when d satisfies the predicate, else the oracle's negative certificate."""
    if predicate is Predicate.HAS_GOOD_PAIR:
        cert = oracle_good_pair(d, budget=budget)
        counter.record(cert)
        return None if cert.found else cert
    for s in d.vertices:
        cert = oracle_good_pair(d, root_in=s, root_out=s, budget=budget)
        counter.record(cert)
        if not cert.found:
            return cert
    return None


def run_enumeration(task, budget=None, stop_on_failure=False):
    """
    Enumerate the task's digraphs, filter them and test the predicate.

    Returns:
        dict: {"n", "mode", "filters", "predicate", "shard", "shards",
        "generated", "qualifying", "failures", "oracle_calls",
        "oracle_branchings", "budget_exceeded", "counterexamples": [lines]}
    """
    task.validate()
    counter = OracleCallCounter()
    summary = {
        "n": task.n,
        "mode": str(task.mode),
        "filters": task.filters.describe(),
        "predicate": str(task.predicate),
        "shard": task.shard,
        "shards": task.shards,
        "generated": 0,
        "qualifying": 0,
        "failures": 0,
        "oracle_calls": 0,
        "oracle_branchings": 0,
        "budget_exceeded": False,
        "counterexamples": [],
    }
    for d in generate(task):
        if budget is not None and budget.expired():
            summary["budget_exceeded"] = True
            logger.warning(f"Enumeration n={task.n} shard {task.shard} stopped by its time budget")
            break
        summary["generated"] += 1
        if not task.filters.accepts(d):
            continue
        summary["qualifying"] += 1
        try:
            failing = _failing_certificate(d, task.predicate, budget, counter)
        except BudgetExceeded as e:
            summary["budget_exceeded"] = True
            logger.warning(f"Oracle budget exceeded during enumeration: {e}")
            break
        if failing is not None:
            summary["failures"] += 1
            summary["counterexamples"].append(counterexample_lines(d, failing))
            logger.error(f"Predicate {task.predicate} fails on {d!r}")
            if stop_on_failure:
                break
    summary["oracle_calls"] = counter.calls
    summary["oracle_branchings"] = counter.branchings
    logger.info(
        f"Enumeration n={task.n} mode={task.mode} shard {task.shard}/{task.shards}: "
        f"{summary['qualifying']} of {summary['generated']} qualify, {summary['failures']} failures"
    )
    return summary


def merge_summaries(summaries):
    return merge_shards(
        summaries,
        ("n", "mode", "filters", "predicate"),
        ("generated", "qualifying", "failures", "oracle_calls", "oracle_branchings"),
        "counterexamples",
    )
