"""
Seeded random instance generators and rejection sampling.

Instance i of a run with seed s is drawn from its own generator seeded
with "s:i", so a run is reproducible from (seed, config) and any shard
can regenerate any instance.
"""

import logging
import random
from dataclasses import dataclass
from itertools import combinations

from goodpairs.analysis import arc_connectivity, co_bipartition, independence_number
from goodpairs.digraph import build

logger = logging.getLogger(__name__)

# Attempts per instance before the sampler gives up on it
MAX_ATTEMPTS = 200


def instance_rng(seed, index):
    return random.Random(f"{seed}:{index}")


def random_digraph(rng, n, density=None):
    """Simple digraph with each ordered pair an arc with probability density."""
    density = rng.uniform(0.4, 0.9) if density is None else density
    arcs = [(t, h) for t in range(n) for h in range(n) if t != h and rng.random() < density]
    return build(n, arcs)


def _semicomplete_arcs(rng, vertices, two_cycle_rate):
    arcs = []
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            if rng.random() < two_cycle_rate:
                arcs.extend([(u, v), (v, u)])
            elif rng.random() < 0.5:
                arcs.append((u, v))
            else:
                arcs.append((v, u))
    return arcs


def random_semicomplete(rng, n, two_cycle_rate=None):
    """Semicomplete digraph; each pair is a 2-cycle with probability two_cycle_rate."""
    two_cycle_rate = rng.uniform(0.0, 0.4) if two_cycle_rate is None else two_cycle_rate
    return build(n, _semicomplete_arcs(rng, list(range(n)), two_cycle_rate))


def random_cobipartite(rng, n, cross_density=None):
    """Two random semicomplete halves of random sizes plus random cross arcs."""
    cross_density = rng.uniform(0.2, 0.6) if cross_density is None else cross_density
    vertices = list(range(n))
    rng.shuffle(vertices)
    cut = rng.randint(1, n - 1)
    first, second = sorted(vertices[:cut]), sorted(vertices[cut:])
    arcs = _semicomplete_arcs(rng, first, rng.uniform(0.0, 0.4))
    arcs.extend(_semicomplete_arcs(rng, second, rng.uniform(0.0, 0.4)))
    for u in first:
        for v in second:
            if rng.random() < cross_density:
                arcs.append((u, v))
            if rng.random() < cross_density:
                arcs.append((v, u))
    return build(n, arcs)


def random_odd_hole(rng, n, two_cycle_rate=None):
    """
    Digraph whose non-adjacent pairs form a triangle-free graph containing
    an odd cycle of length at least 5.

    α <= 2 holds by construction, and the odd cycle keeps the result from
    being semicomplete or co-bipartite. Needs n >= 5.
    """
    two_cycle_rate = rng.uniform(0.3, 0.7) if two_cycle_rate is None else two_cycle_rate
    length = rng.choice([k for k in (5, 7) if k <= n])
    cycle = rng.sample(range(n), length)
    missing = {frozenset((cycle[i], cycle[(i + 1) % length])) for i in range(length)}
    extra = rng.uniform(0.0, 0.15)
    for u, v in combinations(range(n), 2):
        pair = frozenset((u, v))
        if pair in missing or rng.random() >= extra:
            continue
        if any(frozenset((u, w)) in missing and frozenset((v, w)) in missing for w in range(n)):
            continue
        missing.add(pair)
    arcs = []
    for u, v in combinations(range(n), 2):
        if frozenset((u, v)) in missing:
            continue
        if rng.random() < two_cycle_rate:
            arcs.extend([(u, v), (v, u)])
        else:
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return build(n, arcs)


def random_alpha2_candidate(rng, n):
    """
    Candidate for α <= 2: mostly an odd-hole digraph, otherwise a random
    co-bipartite digraph or a semicomplete digraph with a few pairs made
    non-adjacent. α is only guaranteed for the odd-hole draws.
    """
    roll = rng.random()
    if n >= 5 and roll < 0.6:
        return random_odd_hole(rng, n)
    if roll < 0.8:
        return random_cobipartite(rng, n)
    d = random_semicomplete(rng, n, two_cycle_rate=rng.uniform(0.2, 0.6))
    drop = rng.uniform(0.05, 0.3)
    dropped = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < drop}
    return build(n, [(t, h) for t, h in d.pairs() if (min(t, h), max(t, h)) not in dropped])


GENERATORS = {
    "digraph": random_digraph,
    "semicomplete": random_semicomplete,
    "cobipartite": random_cobipartite,
    "alpha2": random_alpha2_candidate,
}


def is_two_arc_strong(d):
    return d.n >= 2 and arc_connectivity(d) >= 2


def has_alpha_at_most_two(d):
    return independence_number(d)[0] <= 2


def is_alpha2_instance(d):
    """α(d) <= 2 <= λ(d)."""
    return is_two_arc_strong(d) and has_alpha_at_most_two(d)


def is_cobipartite_instance(d):
    return co_bipartition(d) is not None and is_two_arc_strong(d)


@dataclass(frozen=True)
class Sample:
    index: int
    digraph: object
    attempts: int


def sample(kind, n_range, seed, count, accept=None, start=0, step=1, budget=None):
    """
    Yield accepted random instances.

    Instances are indexed start, start + step, ... below count, so shards
    (start = shard, step = shards) partition the run. An index whose
    MAX_ATTEMPTS draws are all rejected is skipped.

    Args:
        kind: Generator name from GENERATORS
        n_range: (lowest, highest) order, inclusive
        seed: Run seed
        count: Number of instance indices
        accept: Optional predicate on the drawn digraph
        budget: Optional Budget; sampling stops when it expires

    Yields:
        Sample
    """
    generator = GENERATORS[kind]
    low, high = n_range
    rejected = 0
    for index in range(start, count, step):
        if budget is not None and budget.expired():
            logger.warning(f"Sampling stopped at instance {index}: time budget spent")
            return
        rng = instance_rng(seed, index)
        for attempt in range(1, MAX_ATTEMPTS + 1):
            d = generator(rng, rng.randint(low, high))
            if accept is None or accept(d):
                yield Sample(index, d, attempt)
                break
            rejected += 1
        else:
            logger.debug(f"Instance {index} of seed {seed} skipped after {MAX_ATTEMPTS} rejections")
    logger.debug(f"Sampling {kind} with seed {seed}: {rejected} draws rejected")
