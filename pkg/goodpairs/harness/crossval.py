"""
Cross-validation of the constructive solvers against the oracle.

Each registered operation draws random instances meeting its
preconditions, runs the construction, validates its pair and, for small
enough orders, compares existence with the oracle's verdict.
"""

import logging
from dataclasses import dataclass, replace

from django.conf import settings

from goodpairs.analysis import in_generators, is_strong, out_generators
from goodpairs.branchings import (
    EXCEPTION_KINDS,
    BudgetExceeded,
    OracleCallCounter,
    oracle_good_pair,
    validate_good_pair,
)
from goodpairs.harness.reports import UnknownOperation, counterexample_lines, merge_shards
from goodpairs.harness.sampling import is_alpha2_instance, is_cobipartite_instance, sample
from goodpairs.solvers import (
    SolverError,
    alpha2_good_pair,
    cobipartite_good_pair,
    semicomplete_good_pair,
    semicomplete_good_r_pair,
    semicomplete_nonstrong_pair,
    small_good_pair,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Outcome:
    """One comparison; mismatch carries the transcript lines."""

    mismatch: bool = False
    exceptions: int = 0
    oracle_checked: bool = False
    transcript: tuple = ()


def _compare(d, pair, oracle_cert, what, **roots):
    """Mismatch when pair is invalid or its existence disagrees with the oracle."""
    if pair is not None:
        verdict = validate_good_pair(d, pair, **roots)
        if not verdict:
            lines = [f"CERT mismatch op={what} reason={verdict.reason.replace(' ', '_')}"]
            lines.extend(counterexample_lines(d))
            return Outcome(True, transcript=tuple(lines))
    if oracle_cert is not None and oracle_cert.found != (pair is not None):
        lines = [f"CERT mismatch op={what} constructive={str(pair is not None).lower()} oracle={str(oracle_cert.found).lower()}"]
        lines.extend(counterexample_lines(d, oracle_cert))
        return Outcome(True, oracle_checked=True, transcript=tuple(lines))
    return Outcome(oracle_checked=oracle_cert is not None)


def _oracle(d, counter, budget, **roots):
    if d.n > settings.BRANCHPAIR_CROSSVAL_ORACLE_MAX_N:
        return None
    cert = oracle_good_pair(d, budget=budget, **roots)
    counter.record(cert)
    return cert


def _attempt(what, d, solve, *args, **kwargs):
    """
    (result, None) of a construction, or (None, mismatch) when it raised.

    Every registered operation is only run on instances meeting its
    preconditions, so a solver error is always a mismatch.
    """
    try:
        return solve(d, *args, **kwargs), None
    except SolverError as e:
        logger.error(f"{what} failed on {d!r}: {e}")
        lines = [f"CERT mismatch op={what} error={str(e).replace(' ', '_')}", *counterexample_lines(d)]
        return None, Outcome(True, transcript=tuple(lines))


def _unrooted(solve):
    def check(d, counter, budget):
        pair, failed = _attempt(solve.__name__, d, solve)
        if failed:
            return [failed]
        return [_compare(d, pair, _oracle(d, counter, budget), solve.__name__)]

    return check


def _check_alpha2(d, counter, budget):
    report, failed = _attempt("alpha2_good_pair", d, alpha2_good_pair, budget=budget)
    if failed:
        return [failed]
    return [_compare(d, report.pair, _oracle(d, counter, budget), "alpha2_good_pair")]


def _check_small(d, counter, budget):
    cert, failed = _attempt("small_good_pair", d, small_good_pair)
    if failed:
        return [failed]
    return [_compare(d, cert.pair, _oracle(d, counter, budget), "small_good_pair")]


def _check_r_pairs(d, counter, budget):
    outcomes = []
    for r in sorted(in_generators(d)):
        what = f"semicomplete_good_r_pair[r={r}]"
        cert, failed = _attempt(what, d, semicomplete_good_r_pair, r)
        if failed:
            outcomes.append(failed)
            continue
        outcome = _compare(d, cert.pair, _oracle(d, counter, budget, root_in=r), what, root_in=r)
        if cert.kind in EXCEPTION_KINDS:
            outcome = replace(outcome, exceptions=1)
        outcomes.append(outcome)
    return outcomes


def _check_nonstrong(d, counter, budget):
    outcomes = []
    for r in sorted(in_generators(d)):
        for q in sorted(out_generators(d)):
            what = f"semicomplete_nonstrong_pair[r={r},q={q}]"
            pair, failed = _attempt(what, d, semicomplete_nonstrong_pair, r, q)
            if failed:
                outcomes.append(failed)
                continue
            cert = _oracle(d, counter, budget, root_in=r, root_out=q)
            outcomes.append(_compare(d, pair, cert, what, root_in=r, root_out=q))
    return outcomes


@dataclass(frozen=True)
class Operation:
    name: str
    check: object
    kind: str
    n_range: tuple
    accept: object = None


def _non_strong(d):
    return not is_strong(d)


OPERATIONS = {
    operation.name: operation
    for operation in (
        Operation("alpha2_good_pair", _check_alpha2, "alpha2", (7, 10), is_alpha2_instance),
        Operation("semicomplete_good_r_pair", _check_r_pairs, "semicomplete", (4, 8)),
        Operation("semicomplete_good_pair", _unrooted(semicomplete_good_pair), "semicomplete", (4, 8)),
        Operation("semicomplete_nonstrong_pair", _check_nonstrong, "semicomplete", (4, 8), _non_strong),
        Operation("cobipartite_good_pair", _unrooted(cobipartite_good_pair), "cobipartite", (6, 10),
                  is_cobipartite_instance),
        Operation("small_good_pair", _check_small, "digraph", (2, 6)),
    )
}  # fmt: skip


def get_operation(name):
    operation = OPERATIONS.get(name)
    if operation is None:
        raise UnknownOperation(f"unknown operation '{name}'; choose from {', '.join(OPERATIONS)}")
    return operation


def cross_validate(name, count, seed, n_range=None, budget=None, shard=0, shards=1):
    """
    Run one operation on random instances and compare with the oracle.

    Returns:
        dict: {"operation", "seed", "n_low", "n_high", "shard", "shards",
        "instances", "checks", "oracle_checked", "exceptions", "failures",
        "oracle_calls", "budget_exceeded", "mismatches": [lines]}

    Raises:
        UnknownOperation: If name is not registered
    """
    operation = get_operation(name)
    low, high = n_range or operation.n_range
    counter = OracleCallCounter()
    summary = {
        "operation": name,
        "seed": seed,
        "n_low": low,
        "n_high": high,
        "shard": shard,
        "shards": shards,
        "instances": 0,
        "checks": 0,
        "oracle_checked": 0,
        "exceptions": 0,
        "failures": 0,
        "oracle_calls": 0,
        "budget_exceeded": False,
        "mismatches": [],
    }
    drawn = sample(operation.kind, (low, high), seed, count, operation.accept, shard, shards, budget)
    for item in drawn:
        summary["instances"] += 1
        try:
            outcomes = operation.check(item.digraph, counter, budget)
        except BudgetExceeded as e:
            summary["budget_exceeded"] = True
            logger.warning(f"Cross-validation of {name} stopped at instance {item.index}: {e}")
            break
        for outcome in outcomes:
            summary["checks"] += 1
            summary["oracle_checked"] += outcome.oracle_checked
            summary["exceptions"] += outcome.exceptions
            if outcome.mismatch:
                summary["failures"] += 1
                summary["mismatches"].append([f"CERT instance={item.index}", *outcome.transcript])
                logger.error(f"{name} disagrees with the oracle on instance {item.index} of seed {seed}")
    if budget is not None and budget.expired():
        summary["budget_exceeded"] = True
    summary["oracle_calls"] = counter.calls
    logger.info(
        f"Cross-validated {name} on {summary['instances']} instances: "
        f"{summary['failures']} mismatches, {summary['exceptions']} exceptions"
    )
    return summary


def merge_crossval(summaries):
    return merge_shards(
        summaries,
        ("operation", "seed", "n_low", "n_high"),
        ("instances", "checks", "oracle_checked", "exceptions", "failures", "oracle_calls"),
        "mismatches",
    )
