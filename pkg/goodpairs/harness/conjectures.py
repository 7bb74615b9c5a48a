"""
Counterexample search for the open rooted conjectures.

same-root-alpha2: a 2-arc-strong digraph with α <= 2 has arc-disjoint
B+_s, B-_s for every vertex s.
prescribed-roots-3arc: a 3-arc-strong digraph with α <= 2 has
arc-disjoint B+_s, B-_t for every choice of s and t.
"""

import logging
from dataclasses import dataclass, field
from enum import StrEnum

from goodpairs.analysis import arc_connectivity, independence_number
from goodpairs.branchings import BudgetExceeded, OracleCallCounter, oracle_good_pair
from goodpairs.harness.reports import HarnessError, counterexample_lines, merge_shards
from goodpairs.harness.sampling import sample

logger = logging.getLogger(__name__)


class Conjecture(StrEnum):
    SAME_ROOT_ALPHA2 = "same-root-alpha2"
    PRESCRIBED_ROOTS_3ARC = "prescribed-roots-3arc"


REQUIRED_LAMBDA = {Conjecture.SAME_ROOT_ALPHA2: 2, Conjecture.PRESCRIBED_ROOTS_3ARC: 3}


def parse_conjecture(name):
    try:
        return Conjecture(name)
    except ValueError:
        raise HarnessError(f"unknown conjecture '{name}'; choose from {', '.join(Conjecture)}") from None


def hypothesis_holds(conjecture, d):
    """Simple digraph with α <= 2 and λ at least the conjecture's bound."""
    if d.is_multi or d.n < 2:
        return False
    if arc_connectivity(d) < REQUIRED_LAMBDA[conjecture]:
        return False
    return independence_number(d)[0] <= 2


def root_choices(conjecture, d):
    """(out-root s, in-root t) pairs the conjecture asks for."""
    if conjecture is Conjecture.SAME_ROOT_ALPHA2:
        return [(s, s) for s in d.vertices]
    return [(s, t) for s in d.vertices for t in d.vertices]


@dataclass
class InstanceResult:
    hypothesis: bool
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def satisfied(self):
        return not self.failures


def check_instance(conjecture, d, budget=None, counter=None, stop_on_failure=False):
    """
    Test every required root choice on d with the oracle, hypothesis or not.

    Returns:
        InstanceResult: failures lists (s, t, certificate)

    Raises:
        BudgetExceeded: If an oracle call runs out of budget
    """
    counter = counter if counter is not None else OracleCallCounter()
    result = InstanceResult(hypothesis_holds(conjecture, d))
    for s, t in root_choices(conjecture, d):
        cert = oracle_good_pair(d, root_in=t, root_out=s, budget=budget)
        counter.record(cert)
        result.checked += 1
        if not cert.found:
            result.failures.append((s, t, cert))
            logger.debug(f"No arc-disjoint B+_{d.label(s)}, B-_{d.label(t)} in {d!r}")
            if stop_on_failure:
                break
    return result


def search(conjecture, count, seed, n_range=(5, 9), budget=None, shard=0, shards=1):
    """
    Sample digraphs meeting the conjecture's hypothesis and test them.

    Any failure is a refutation of the conjecture and is reported with its
    digraph and certificate.

    Returns:
        dict: {"conjecture", "seed", "shard", "shards", "instances",
        "root_choices", "failures", "oracle_calls", "budget_exceeded",
        "counterexamples": [lines]}
    """
    conjecture = parse_conjecture(conjecture)
    counter = OracleCallCounter()
    summary = {
        "conjecture": str(conjecture),
        "seed": seed,
        "shard": shard,
        "shards": shards,
        "instances": 0,
        "root_choices": 0,
        "failures": 0,
        "oracle_calls": 0,
        "budget_exceeded": False,
        "counterexamples": [],
    }

    def accept(d):
        return hypothesis_holds(conjecture, d)

    for item in sample("alpha2", n_range, seed, count, accept, shard, shards, budget):
        summary["instances"] += 1
        try:
            result = check_instance(conjecture, item.digraph, budget, counter, stop_on_failure=True)
        except BudgetExceeded as e:
            summary["budget_exceeded"] = True
            logger.warning(f"Conjecture search stopped at instance {item.index}: {e}")
            break
        summary["root_choices"] += result.checked
        if not result.satisfied:
            s, t, cert = result.failures[0]
            d = item.digraph
            summary["failures"] += 1
            summary["counterexamples"].append(
                [f"CERT refuted-conjecture={conjecture} instance={item.index} s={d.label(s)} t={d.label(t)}",
                 *counterexample_lines(d, cert)]
            )
            logger.error(f"Counterexample to {conjecture} at instance {item.index} of seed {seed}")
    if budget is not None and budget.expired():
        summary["budget_exceeded"] = True
    summary["oracle_calls"] = counter.calls
    logger.info(f"Searched {summary['instances']} instances for {conjecture}: {summary['failures']} counterexamples")
    return summary


def merge_search(summaries):
    return merge_shards(
        summaries,
        ("conjecture", "seed"),
        ("instances", "root_choices", "failures", "oracle_calls"),
        "counterexamples",
    )
