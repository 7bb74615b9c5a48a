"""
Good pairs of digraphs on at most six vertices, and the two extension
lemmas that grow a pair of a subdigraph onto the vertices around it.
"""

import logging
from itertools import combinations, permutations

import networkx as nx

from goodpairs.analysis import is_semicomplete
from goodpairs.branchings import (
    Certificate,
    CertificateKind,
    GoodPair,
    oracle_good_pair,
    validate_good_pair,
)
from goodpairs.digraph import induced, remove_arcs, reverse, to_networkx
from goodpairs.figures import E4, F4, SIX_OK
from goodpairs.solvers.base import (
    PreconditionViolated,
    checked,
    embed_figure_pair,
    in_tree,
    lift,
    out_tree,
    pair_vertices,
    two_cycle_pair,
)
from goodpairs.solvers.semicomplete import semicomplete_good_pair

logger = logging.getLogger(__name__)

SMALL_MAX_VERTICES = 6


def _buffer_arcs(d, x, inside):
    """(x y_x, w_x x) with y_x, w_x the lowest out- and in-neighbours of x inside, or None."""
    y = next((w for w in d.out_adj[x] if w in inside), None)
    w = next((u for u in d.in_adj[x] if u in inside), None)
    if y is None or w is None:
        return None
    return (x, y), (w, x)


def extend_by_buffer(d, buffer, sub_pair):
    """
    Extend a good pair of d - buffer to d.

    Every buffer vertex x gets the arc x y_x in the in-branching and w_x x
    in the out-branching, y_x and w_x being its lowest out- and in-neighbour
    outside the buffer.

    Args:
        d: Digraph
        buffer: Vertex set X
        sub_pair: Good pair of d - X, in d's vertex indices

    Raises:
        PreconditionViolated: If some x lacks an in- or out-neighbour outside X
    """
    buffer = set(buffer)
    inside = set(d.vertices) - buffer
    in_arcs = list(sub_pair.in_branching.arcs)
    out_arcs = list(sub_pair.out_branching.arcs)
    for x in sorted(buffer):
        arcs = _buffer_arcs(d, x, inside)
        if arcs is None:
            raise PreconditionViolated(f"vertex {x} lacks an in- or out-neighbour outside the buffer")
        in_arcs.append(arcs[0])
        out_arcs.append(arcs[1])
    pair = GoodPair.of(sub_pair.in_root, in_arcs, sub_pair.out_root, out_arcs)
    return checked(d, pair, "buffer extension")


def _three_stuck(d, inside, in_arcs, out_arcs, in_root, out_root):
    """Absorb the last three vertices together, trying every role assignment."""
    rest = [v for v in d.vertices if v not in inside]
    for a, b, c in permutations(rest):
        if not (d.has_arc(a, b) and d.has_arc(b, c) and d.has_arc(a, c)):
            continue
        x1 = next((u for u in d.in_adj[a] if u in inside), None)
        x1p = next((w for w in d.out_adj[c] if w in inside), None)
        if x1 is None or x1p is None:
            continue
        x = next((u for u in d.in_adj[b] if u in inside), None)
        if x is not None:
            extra_out = [(x1, a), (x, b), (a, c)]
        elif d.has_arc(c, b):
            extra_out = [(x1, a), (a, c), (c, b)]
        else:
            continue
        pair = GoodPair.of(in_root, [*in_arcs, (a, b), (b, c), (c, x1p)], out_root, [*out_arcs, *extra_out])
        if validate_good_pair(d, pair):
            return pair
    return None


def _extend_by_three_one_side(d, sub_pair):
    inside = pair_vertices(sub_pair)
    in_arcs = list(sub_pair.in_branching.arcs)
    out_arcs = list(sub_pair.out_branching.arcs)
    progress = True
    while progress and len(inside) < d.n:
        progress = False
        for v in d.vertices:
            if v in inside:
                continue
            arcs = _buffer_arcs(d, v, inside)
            if arcs is not None:
                in_arcs.append(arcs[0])
                out_arcs.append(arcs[1])
                inside.add(v)
                progress = True
                break
    if len(inside) == d.n:
        return GoodPair.of(sub_pair.in_root, in_arcs, sub_pair.out_root, out_arcs)
    if d.n - len(inside) == 3:
        return _three_stuck(d, inside, in_arcs, out_arcs, sub_pair.in_root, sub_pair.out_root)
    return None


def extend_by_three(d, sub_pair):
    """
    Extend a good pair of a subdigraph missing at most three vertices.

    Vertices with both an in- and an out-neighbour in the covered part are
    absorbed one by one; three vertices left stuck are absorbed together
    as a transitive triple a, b, c entered at a and left from c. When that
    fails the reversed digraph is tried.

    Raises:
        PreconditionViolated: If no extension applies
    """
    pair = _extend_by_three_one_side(d, sub_pair)
    if pair is None:
        pair = _extend_by_three_one_side(reverse(d), sub_pair.reversed())
        pair = pair.reversed() if pair is not None else None
    if pair is None:
        raise PreconditionViolated("the remaining vertices cannot be absorbed")
    return checked(d, pair, "three-vertex extension")


def _path_split_pair(d):
    """Pair on 3 vertices from a 2-cycle (a, b, a) and an arc bc."""
    for a, b in permutations(d.vertices, 2):
        if not (d.has_arc(a, b) and d.has_arc(b, a)):
            continue
        c = 3 - a - b
        if not d.has_arc(b, c):
            continue
        path = [(a, b), (b, c)]
        rest = remove_arcs(d, path)
        everything = set(d.vertices)
        for root in d.vertices:
            arcs, reached = out_tree(rest, [root], everything)
            if reached == everything:
                return GoodPair.of(c, path, root, arcs)
            arcs, reached = in_tree(rest, [root], everything)
            if reached == everything:
                return GoodPair.of(root, arcs, a, path)
    return None


def three_vertex_pair(d):
    """
    Good pair of a 3-vertex digraph with at least 4 arcs.

    The path P = (a, b, c) through a 2-cycle is both an in- and an
    out-branching; the arcs left over contain a branching of the other kind.

    Raises:
        PreconditionViolated: If d does not have 3 vertices and 4 arcs
    """
    if d.n != 3 or d.arc_count < 4:
        raise PreconditionViolated("need 3 vertices and at least 4 arcs")
    pair = _path_split_pair(d)
    if pair is None:
        pair = _path_split_pair(reverse(d))
        pair = pair.reversed() if pair is not None else None
    if pair is None:
        raise PreconditionViolated("no 2-cycle with an arc leaving it")
    return checked(d, pair, "path split")


def is_e4(d):
    if d.n != 4 or (d.is_multi and any(arc.multiplicity > 1 for arc in d.arcs)):
        return False
    return nx.is_isomorphic(to_networkx(d), to_networkx(E4.host()))


def _seed_pairs(d):
    """Subsets with a known good pair, largest first: 4-cliques, rich triples, 2-cycles."""
    for size in (4, 3):
        for subset in combinations(d.vertices, size):
            if size == d.n:
                continue
            sub = induced(d, subset)
            try:
                if size == 4 and is_semicomplete(sub):
                    yield subset, lift(semicomplete_good_pair(sub), sub)
                elif size == 3 and sub.arc_count >= 4:
                    yield subset, lift(three_vertex_pair(sub), sub)
            except PreconditionViolated:
                continue
    for u, v in combinations(d.vertices, 2):
        if d.has_arc(u, v) and d.has_arc(v, u):
            yield (u, v), two_cycle_pair(u, v)


def _found(pair, route):
    return Certificate(CertificateKind.PAIR_FOUND, pair=pair, route=route)


def small_good_pair(d):
    """
    Decide whether a digraph on at most six vertices has a good pair.

    Constructions are tried first (2-cycle, path split, semicomplete,
    extension of a seed, drawn tables); the oracle settles the rest, so the
    answer is always exact.

    Returns:
        Certificate: PAIR_FOUND with its route, or EXHAUSTED_SEARCH

    Raises:
        PreconditionViolated: If d has more than six vertices
    """
    if d.n > SMALL_MAX_VERTICES:
        raise PreconditionViolated(f"small digraphs have at most {SMALL_MAX_VERTICES} vertices, got {d.n}")
    if d.n == 1:
        return _found(GoodPair.of(0, [], 0, []), "trivial")
    if d.n == 2 and d.has_arc(0, 1) and d.has_arc(1, 0):
        return _found(two_cycle_pair(0, 1), "two-cycle")
    if d.n == 3 and d.arc_count >= 4:
        try:
            return _found(three_vertex_pair(d), "path-split")
        except PreconditionViolated:
            pass
    if d.n == 4 and is_e4(d):
        cert = oracle_good_pair(d)
        logger.debug(f"E4 recognised, oracle says {cert.kind}")
        return Certificate(cert.kind, pair=cert.pair, statistics=cert.statistics, route="e4")

    if d.n >= 4:
        if is_semicomplete(d):
            return _found(semicomplete_good_pair(d), "semicomplete")
        for subset, seed in _seed_pairs(d):
            try:
                return _found(extend_by_three(d, seed), f"extend-{len(subset)}")
            except PreconditionViolated:
                continue
        for figure in (F4, *SIX_OK):
            pair = embed_figure_pair(d, figure)
            if pair is not None:
                return _found(checked(d, pair, f"table {figure.name}"), f"table-{figure.name}")

    cert = oracle_good_pair(d)
    return Certificate(cert.kind, pair=cert.pair, statistics=cert.statistics, route="oracle")
