"""
Good pairs of 2-arc-strong co-bipartite digraphs.

The two semicomplete halves V1, V2 (|V1| <= |V2|) are solved separately
and stitched together by cross arcs; a small first half is absorbed with
the extension lemmas instead, and the six-vertex leftovers are matched
against drawn tables or split along their 6-cycle.
"""

import logging

from goodpairs.analysis import (
    arc_connectivity,
    co_bipartition,
    hamiltonian_path,
    in_generators,
    out_generators,
)
from goodpairs.branchings import GoodPair, is_exception, oracle_good_pair, validate_good_pair
from goodpairs.digraph import induced, reverse
from goodpairs.figures import ORDER_SIX, SIX_VERTEX
from goodpairs.solvers.base import (
    PreconditionViolated,
    SolveReport,
    SoundnessError,
    Strategy,
    checked,
    embed_figure_pair,
    in_tree,
    lift,
)
from goodpairs.solvers.semicomplete import semicomplete_good_pair, semicomplete_good_r_pair
from goodpairs.solvers.small import extend_by_buffer, extend_by_three, small_good_pair, three_vertex_pair

logger = logging.getLogger(__name__)


def _half_pair(d, side):
    """Good pair of the semicomplete half induced by side, when one exists."""
    sub = induced(d, side)
    if sub.n >= 4:
        return lift(semicomplete_good_pair(sub), sub)
    if sub.n == 3 and sub.arc_count >= 4:
        return lift(three_vertex_pair(sub), sub)
    return None


def _lowest_in_neighbour(d, v, side):
    u = next((u for u in d.in_adj[v] if u in side), None)
    if u is None:
        raise PreconditionViolated(f"vertex {v} has no in-neighbour on the other side")
    return u


def _stitch_exception(d, v1, v2, a1, a2):
    """
    Pair when (D1, a1) is an exception: y1 is the only in-neighbour of a1 in D1.

    The in-branching collects V1 at a1 and crosses over a1a2; the
    out-branching enters a1 and y1 from V2 and fans out of a1.
    """
    d1 = induced(d, v1)
    y1 = d1.back_map[d1.in_adj[d1.back_map.index(a1)][0]]
    pair2 = _half_pair(d, v2)
    in1, _ = in_tree(d, [a1], v1)
    out1 = [(a1, v) for v in sorted(v1) if v not in (a1, y1)]
    in_arcs = [*pair2.in_branching.arcs, (a1, a2), *in1]
    out_arcs = [
        *pair2.out_branching.arcs,
        (_lowest_in_neighbour(d, a1, v2), a1),
        (_lowest_in_neighbour(d, y1, v2), y1),
        *out1,
    ]
    return GoodPair.of(pair2.in_root, in_arcs, pair2.out_root, out_arcs)


def _case_large(d, v1, v2):
    """Both halves have at least four vertices."""
    d1 = induced(d, v1)
    d2 = induced(d, v2)
    in1 = {d1.back_map[v] for v in in_generators(d1)}
    first = [(t, h) for t in sorted(in1) for h in d.out_adj[t] if h in v2]
    if not first:
        raise PreconditionViolated("no arc leaves the in-generators of the first half")
    a1, a2 = first[0]

    local_a1 = d1.back_map.index(a1)
    if is_exception(d1, local_a1) is not None:
        logger.debug(f"first half is an exception at {a1}")
        return _stitch_exception(d, v1, v2, a1, a2), "exception-first"
    pair1 = lift(semicomplete_good_r_pair(d1, local_a1).pair, d1)

    out2 = {d2.back_map[v] for v in out_generators(d2)}
    second = [
        (t, h)
        for t in sorted(v1)
        for h in d.out_adj[t]
        if h in out2 and ((t, h) != (a1, a2) or d.multiplicity(t, h) >= 2)
    ]
    if not second:
        raise PreconditionViolated("no second arc enters the out-generators of the second half")
    b1, b2 = second[0]
    reversed_half = reverse(d2)
    local_b2 = d2.back_map.index(b2)
    if is_exception(reversed_half, local_b2) is not None:
        logger.debug(f"reversed second half is an exception at {b2}")
        return _stitch_exception(reverse(d), v2, v1, b2, b1).reversed(), "exception-second"
    pair2 = lift(semicomplete_good_r_pair(reversed_half, local_b2).pair.reversed(), d2)

    in_arcs = [*pair2.in_branching.arcs, (a1, a2), *pair1.in_branching.arcs]
    out_arcs = [*pair1.out_branching.arcs, (b1, b2), *pair2.out_branching.arcs]
    return GoodPair.of(pair2.in_root, in_arcs, pair1.out_root, out_arcs), "stitch"


def _six_cycle_split(d, v1, v2):
    """Both halves 3-cycles and the cross arcs a 6-cycle C: (C - a, P1 + a + P2)."""
    cross = [(t, h) for t, h in d.pairs() if (t in v1) != (h in v1)]
    if len(cross) != 6 or any(len(d.out_adj[v]) != 2 or len(d.in_adj[v]) != 2 for v in d.vertices):
        return None
    heads = {t: h for t, h in cross}
    if len(heads) != 6:
        return None
    a = min((t, h) for t, h in cross if t in v1)
    d1 = induced(d, v1)
    d2 = induced(d, v2)
    p1 = hamiltonian_path(d1, fixed_end=d1.back_map.index(a[0]))
    p2 = hamiltonian_path(d2, fixed_start=d2.back_map.index(a[1]))
    if p1 is None or p2 is None:
        return None
    walk = [d1.back_map[v] for v in p1] + [d2.back_map[v] for v in p2]
    cycle_rest = [(t, h) for t, h in cross if (t, h) != a]
    pair = GoodPair.of(a[0], cycle_rest, walk[0], list(zip(walk, walk[1:])))
    return pair if validate_good_pair(d, pair) else None


def _case_three(d, v1, v2):
    """First half of exactly three vertices."""
    for side in (v2, v1):
        seed = _half_pair(d, side)
        if seed is not None:
            try:
                return extend_by_three(d, seed), "three-good"
            except PreconditionViolated:
                continue
    for figure in (*SIX_VERTEX, *ORDER_SIX):
        pair = embed_figure_pair(d, figure)
        if pair is not None:
            return pair, f"table-{figure.name}"
    pair = _six_cycle_split(d, v1, v2)
    if pair is not None:
        return pair, "six-cycle-split"
    return None, ""


def cobipartite_report(d):
    """
    Good pair of a co-bipartite digraph with arc-connectivity at least 2, with the case that built it.

    Returns:
        SolveReport

    Raises:
        PreconditionViolated: If d is not co-bipartite or not 2-arc-strong
    """
    split = co_bipartition(d, nonempty=True)
    if split is None:
        raise PreconditionViolated("digraph is not co-bipartite")
    if d.n < 2 or arc_connectivity(d) < 2:
        raise PreconditionViolated("digraph is not 2-arc-strong")
    v1, v2 = sorted((set(split.v1), set(split.v2)), key=lambda side: (len(side), min(side)))

    if d.n <= 5:
        cert = small_good_pair(d)
        if not cert.found:
            raise SoundnessError("2-arc-strong digraph on at most five vertices without a good pair")
        return SolveReport(Strategy.SMALL_LOOKUP, cert.pair, validated=True, detail=cert.route)

    if len(v1) <= 2:
        pair = extend_by_buffer(d, v1, _half_pair(d, v2))
        return SolveReport(Strategy.COBIPARTITE_CASE2, pair, validated=True, detail="buffer")

    if len(v1) >= 4:
        pair, route = _case_large(d, v1, v2)
        pair = checked(d, pair, f"co-bipartite {route}")
        return SolveReport(Strategy.COBIPARTITE_CASE1, pair, validated=True, detail=route)

    pair, route = _case_three(d, v1, v2)
    if pair is not None:
        pair = checked(d, pair, f"co-bipartite {route}")
        return SolveReport(Strategy.COBIPARTITE_CASE3, pair, validated=True, detail=route)

    logger.warning(f"No co-bipartite construction applies to {d!r}, asking the oracle")
    cert = oracle_good_pair(d)
    if not cert.found:
        raise SoundnessError("2-arc-strong co-bipartite digraph without a good pair")
    return SolveReport(Strategy.ORACLE_FALLBACK, cert.pair, validated=True, detail="oracle")


def cobipartite_good_pair(d):
    """Good pair of a co-bipartite digraph with arc-connectivity at least 2."""
    return cobipartite_report(d).pair

