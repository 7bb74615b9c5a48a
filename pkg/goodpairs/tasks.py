"""
Shard workers for the harness.

These are plain callables: with jobs=1 they run in-process, otherwise
each shard runs in a process pool whose workers set Django up first.
Shard summaries are merged in shard order, so the merged report does not
depend on the worker count's scheduling.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor

import django

from goodpairs.budget import Budget
from goodpairs.harness.conjectures import merge_search, search
from goodpairs.harness.crossval import cross_validate, merge_crossval
from goodpairs.harness.enumeration import merge_summaries, run_enumeration

logger = logging.getLogger(__name__)


def _setup_worker():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "branchpair.settings")
    django.setup()


def run_shards(function, shard_args, jobs=1):
    """Call function(*args) for every shard, in a process pool when jobs > 1."""
    if jobs <= 1 or len(shard_args) <= 1:
        return [function(*args) for args in shard_args]
    logger.info(f"Running {len(shard_args)} shards of {function.__name__} on {jobs} workers")
    with ProcessPoolExecutor(max_workers=jobs, initializer=_setup_worker) as pool:
        futures = [pool.submit(function, *args) for args in shard_args]
        return [future.result() for future in futures]


def _seconds(budget):
    return budget.remaining() if budget is not None else None


def enumeration_shard(task, seconds=None, stop_on_failure=False):
    return run_enumeration(task, Budget(seconds=seconds), stop_on_failure)


def crossval_shard(name, count, seed, n_range, seconds, shard, shards):
    return cross_validate(name, count, seed, n_range, Budget(seconds=seconds), shard, shards)


def conjecture_shard(conjecture, count, seed, n_range, seconds, shard, shards):
    return search(conjecture, count, seed, n_range, Budget(seconds=seconds), shard, shards)


def enumerate_digraphs(task, jobs=1, budget=None, stop_on_failure=False):
    """
    Run an enumeration task split into one shard per job.

    Returns:
        dict: merged summary (see run_enumeration)
    """
    shards = max(jobs, 1)
    args = [(task.for_shard(shard, shards), _seconds(budget), stop_on_failure) for shard in range(shards)]
    return merge_summaries(run_shards(enumeration_shard, args, jobs))


def cross_validate_sharded(name, count, seed, n_range=None, jobs=1, budget=None):
    shards = max(jobs, 1)
    args = [(name, count, seed, n_range, _seconds(budget), shard, shards) for shard in range(shards)]
    return merge_crossval(run_shards(crossval_shard, args, jobs))


def search_sharded(conjecture, count, seed, n_range=(5, 9), jobs=1, budget=None):
    shards = max(jobs, 1)
    args = [(conjecture, count, seed, n_range, _seconds(budget), shard, shards) for shard in range(shards)]
    return merge_search(run_shards(conjecture_shard, args, jobs))
