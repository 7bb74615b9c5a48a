"""
Good pairs of digraphs with independence number at most 2 and
arc-connectivity at least 2.

A pipeline of constructions, cheapest first: small digraphs, the
semicomplete and co-bipartite solvers, growing a seed pair until every
outside vertex hangs off it, and the Hamiltonian path endgame. The oracle
is the last resort; reaching it without success means a construction is
missing, never that the digraph has no pair.
"""

import logging
from collections import Counter
from itertools import combinations, product

import networkx as nx

from goodpairs.analysis import (
    HAMILTONIAN_MAX_VERTICES,
    arc_connectivity,
    co_bipartition,
    hamiltonian_path,
    independence_number,
    is_semicomplete,
    strong_components,
)
from goodpairs.branchings import GoodPair, oracle_good_pair, validate_good_pair
from goodpairs.digraph import induced, remove_arcs, to_networkx
from goodpairs.solvers.base import (
    PreconditionViolated,
    SolveReport,
    SoundnessError,
    Strategy,
    checked,
    in_tree,
    lift,
    out_tree,
    pair_vertices,
    two_cycle_pair,
)
from goodpairs.solvers.cobipartite import cobipartite_report
from goodpairs.solvers.semicomplete import semicomplete_good_pair, semicomplete_good_r_pair
from goodpairs.solvers.small import small_good_pair, three_vertex_pair

logger = logging.getLogger(__name__)

SMALL_STAGE_MAX_VERTICES = 6


def _small_strategy(route):
    if route.startswith("extend"):
        return Strategy.EXTEND_LEMMA
    if route == "semicomplete":
        return Strategy.EXCEPTION_THEOREM
    if route == "oracle":
        return Strategy.ORACLE_FALLBACK
    return Strategy.SMALL_LOOKUP


def _semicomplete_stage(d):
    r = next((v for v in d.vertices if len(d.in_adj[v]) >= 2), None)
    if r is None:
        return SolveReport(Strategy.NON_STRONG_SEMICOMPLETE, semicomplete_good_pair(d), validated=True, stage=2)
    cert = semicomplete_good_r_pair(d, r)
    if cert.route == "non-strong":
        strategy = Strategy.NON_STRONG_SEMICOMPLETE
    elif cert.route.startswith("extend"):
        strategy = Strategy.UTIL_EXTENSION
    else:
        strategy = Strategy.EXCEPTION_THEOREM
    return SolveReport(strategy, cert.pair, validated=True, stage=2, detail=cert.route)


def _seeds(d):
    """
    Vertex sets with a known good pair, as (label, pair) in d's indices.

    Maximal cliques of four or more vertices come first, then triples with
    four arcs, then 2-cycles.
    """
    underlying = to_networkx(d).to_undirected()
    cliques = sorted((sorted(c) for c in nx.find_cliques(underlying) if len(c) >= 4), key=lambda c: (-len(c), c))
    for clique in cliques:
        sub = induced(d, clique)
        yield f"clique-{len(clique)}", lift(semicomplete_good_pair(sub), sub)
    for triple in combinations(d.vertices, 3):
        sub = induced(d, triple)
        if sub.arc_count >= 4:
            try:
                yield "triple", lift(three_vertex_pair(sub), sub)
            except PreconditionViolated:
                continue
    for u, v in combinations(d.vertices, 2):
        if d.has_arc(u, v) and d.has_arc(v, u):
            yield "two-cycle", two_cycle_pair(u, v)


def _grow(d, seed):
    """Absorb vertices with an in- and an out-neighbour in the covered set until none is left."""
    inside = pair_vertices(seed)
    in_arcs = list(seed.in_branching.arcs)
    out_arcs = list(seed.out_branching.arcs)
    grown = True
    while grown:
        grown = False
        for v in d.vertices:
            if v in inside:
                continue
            y = next((w for w in d.out_adj[v] if w in inside), None)
            w = next((u for u in d.in_adj[v] if u in inside), None)
            if y is not None and w is not None:
                in_arcs.append((v, y))
                out_arcs.append((w, v))
                inside.add(v)
                grown = True
    return inside, GoodPair.of(seed.in_root, in_arcs, seed.out_root, out_arcs)


def _linking_arcs(d, sources, targets, tails_from, heads_into):
    """
    One arc out of each component of tails_from and one into each component of heads_into.

    Returns the two lists (P1, P2), all arcs distinct as occurrences, or None.
    """
    out_choices = [[(t, h) for t in sorted(c) for h in d.out_adj[t] if h in targets] for c in tails_from]
    for p1 in product(*out_choices):
        used = Counter(p1)
        if any(count > d.multiplicity(*arc) for arc, count in used.items()):
            continue
        p2 = []
        for component in heads_into:
            free = (
                (t, h) for h in sorted(component) for t in d.in_adj[h] if t in sources and used[(t, h)] < d.multiplicity(t, h)
            )
            arc = next(free, None)
            if arc is None:
                break
            used[arc] += 1
            p2.append(arc)
        else:
            return list(p1), p2
    return None


def _hang_off(d, inside, core):
    """
    Extend a good pair of D<Q> when every outside vertex is adjacent to Q.

    X = N+(Q) and Y = N-(Q) are disjoint after growing. The in-branching
    sends Y straight into Q and X through its terminal components and a
    linking arc into Y; the out-branching mirrors this from Q into X and
    on into Y.
    """
    outside = set(d.vertices) - inside
    x_side = {v for v in outside if any(u in inside for u in d.in_adj[v])}
    y_side = {v for v in outside if any(w in inside for w in d.out_adj[v])}
    if x_side & y_side or x_side | y_side != outside or not x_side or not y_side:
        return None

    dx = induced(d, x_side)
    dx_scc = strong_components(dx)
    terminal = [{dx.back_map[v] for v in dx_scc.components[i]} for i in dx_scc.terminal]
    dy = induced(d, y_side)
    dy_scc = strong_components(dy)
    initial = [{dy.back_map[v] for v in dy_scc.components[i]} for i in dy_scc.initial]

    linking = _linking_arcs(d, x_side, y_side, terminal, initial)
    if linking is None:
        return None
    p1, p2 = linking
    t_x, reached_x = in_tree(d, [t for t, _ in p1], x_side)
    t_y, reached_y = out_tree(d, [h for _, h in p2], y_side)
    if reached_x != x_side or reached_y != y_side:
        return None

    in_arcs = [*core.in_branching.arcs, *t_x, *p1]
    in_arcs += [(u, next(w for w in d.out_adj[u] if w in inside)) for u in sorted(y_side)]
    out_arcs = [*core.out_branching.arcs, *t_y, *p2]
    out_arcs += [(next(w for w in d.in_adj[u] if w in inside), u) for u in sorted(x_side)]
    pair = GoodPair.of(core.in_root, in_arcs, core.out_root, out_arcs)
    return pair if validate_good_pair(d, pair) else None


def grow_from_seed(d):
    """
    Good pair grown from a seed, or None.

    Each seed is grown greedily; the result is kept when it spans d or
    every remaining vertex is adjacent to the grown set.
    """
    for label, seed in _seeds(d):
        inside, core = _grow(d, seed)
        if len(inside) == d.n:
            if validate_good_pair(d, core):
                return core, f"{label}-spanning"
            continue
        if any(not any(d.adjacent(v, q) for q in inside) for v in d.vertices if v not in inside):
            continue
        pair = _hang_off(d, inside, core)
        if pair is not None:
            return pair, f"{label}-hang-off"
    return None


def _out_branching_within(d, root, within):
    arcs, reached = out_tree(d, [root], within)
    return arcs if reached == set(within) else None


def _two_cycle_end(rest, path, position, small, big):
    a, b = sorted(small, key=lambda v: position[v])
    if not (rest.has_arc(a, b) and rest.has_arc(b, a)):
        return None
    a_next = path[position[a] + 1]
    branch = _out_branching_within(rest, a_next, big)
    if branch is None:
        return None
    path_arcs = [arc for arc in zip(path, path[1:]) if arc != (a, a_next)]
    return GoodPair.of(path[-1], [*path_arcs, (a, b)], b, [(b, a), (a, a_next), *branch])


def _three_cycle_end(rest, path, position, small, big):
    a, b, c = sorted(small, key=lambda v: position[v])
    if rest.has_arc(a, c) and rest.has_arc(c, b) and rest.has_arc(b, a):
        cut, chord, walk = a, (a, c), [c, b, a]
    elif rest.has_arc(a, b) and rest.has_arc(b, c) and rest.has_arc(c, a):
        cut, chord, walk = b, (b, c), [c, a, b]
    else:
        return None
    if position[cut] + 1 >= len(path):
        return None
    cut_next = path[position[cut] + 1]
    branch = _out_branching_within(rest, cut_next, big)
    if branch is None:
        return None
    path_arcs = [arc for arc in zip(path, path[1:]) if arc != (cut, cut_next)]
    out_arcs = [*zip(walk, walk[1:]), (cut, cut_next), *branch]
    return GoodPair.of(path[-1], [*path_arcs, chord], walk[0], out_arcs)


def _start_split_end(d, rest, path, first, second):
    x = path[0]
    if x not in first:
        return None
    x_next = path[1]
    if x_next not in second:
        return None
    second_branch = _out_branching_within(rest, x_next, second)
    if second_branch is None:
        return None
    path_arcs = list(zip(path[1:], path[2:]))
    for z in rest.out_adj[x]:
        if z not in first:
            continue
        for root in sorted(first):
            branch, reached = out_tree(rest, [root], first, usable=lambda t, h, z=z: (t, h) != (x, z))
            if reached != first:
                continue
            pair = GoodPair.of(path[-1], [*path_arcs, (x, z)], root, [*branch, (x, x_next), *second_branch])
            if validate_good_pair(d, pair):
                return pair
    return None


def _path_endgame(d, path):
    """Good pair around a Hamiltonian path P, following the arcs D' = D - A(P) leave over."""
    path_arcs = list(zip(path, path[1:]))
    rest = remove_arcs(d, path_arcs)
    everything = set(d.vertices)
    scc = strong_components(rest)

    if len(scc.initial) == 1:
        root = min(scc.components[scc.initial[0]])
        branch, reached = out_tree(rest, [root], everything)
        if reached == everything:
            return GoodPair.of(path[-1], path_arcs, root, branch), "path-in"
    if len(scc.terminal) == 1:
        root = min(scc.components[scc.terminal[0]])
        branch, reached = in_tree(rest, [root], everything)
        if reached == everything:
            return GoodPair.of(root, branch, path[0], path_arcs), "path-out"
    if scc.count != 2 or scc.dag_arcs:
        return None

    position = {v: i for i, v in enumerate(path)}
    first, second = (set(c) for c in scc.components)
    big, small = (first, second) if len(first) >= len(second) else (second, first)
    attempts = [
        ("start-split", _start_split_end(d, rest, path, first, second)),
        ("start-split", _start_split_end(d, rest, path, second, first)),
    ]
    if len(small) == 2:
        attempts.insert(0, ("two-cycle", _two_cycle_end(rest, path, position, small, big)))
    if len(small) == 3:
        attempts.insert(0, ("three-cycle", _three_cycle_end(rest, path, position, small, big)))
    for label, pair in attempts:
        if pair is not None and validate_good_pair(d, pair):
            return pair, f"path-{label}"
    return None


def hamiltonian_endgame(d):
    """Try the path endgame on a Hamiltonian path from every possible start."""
    if d.n > HAMILTONIAN_MAX_VERTICES:
        return None
    tried = set()
    for start in d.vertices:
        path = hamiltonian_path(d, fixed_start=start)
        if path is None or path in tried:
            continue
        tried.add(path)
        found = _path_endgame(d, path)
        if found is not None:
            return found
    return None


def alpha2_good_pair(d, budget=None):
    """
    Good pair of a digraph with α(d) <= 2 <= λ(d).

    Args:
        d: Digraph
        budget: Optional Budget for the oracle stage

    Returns:
        SolveReport: validated pair with the stage and strategy that built it

    Raises:
        PreconditionViolated: If α(d) > 2 or λ(d) < 2
        SoundnessError: If every stage fails, the oracle included
        BudgetExceeded: If the oracle stage runs out of budget
    """
    if d.n < 2 or arc_connectivity(d) < 2:
        raise PreconditionViolated("digraph is not 2-arc-strong")
    alpha, _ = independence_number(d)
    if alpha > 2:
        raise PreconditionViolated(f"independence number is {alpha}, above 2")

    if d.n <= SMALL_STAGE_MAX_VERTICES:
        cert = small_good_pair(d)
        if not cert.found:
            raise SoundnessError("2-arc-strong digraph on at most six vertices without a good pair")
        return SolveReport(_small_strategy(cert.route), cert.pair, validated=True, stage=1, detail=cert.route)

    if is_semicomplete(d):
        return _semicomplete_stage(d)

    if co_bipartition(d) is not None:
        report = cobipartite_report(d)
        return SolveReport(report.strategy, report.pair, validated=True, stage=3, detail=report.detail)

    grown = grow_from_seed(d)
    if grown is not None:
        pair, route = grown
        pair = checked(d, pair, f"seed growth {route}")
        return SolveReport(Strategy.ALPHA2_PIPELINE, pair, validated=True, stage=4, detail=route)

    ended = hamiltonian_endgame(d)
    if ended is not None:
        pair, route = ended
        pair = checked(d, pair, f"Hamiltonian endgame {route}")
        return SolveReport(Strategy.ALPHA2_PIPELINE, pair, validated=True, stage=5, detail=route)

    logger.warning(f"Constructive stages exhausted on {d!r}, falling back to the oracle")
    cert = oracle_good_pair(d, budget=budget)
    if not cert.found:
        logger.error(f"Oracle found no good pair in {d!r} although α <= 2 <= λ")
        raise SoundnessError("no good pair although α <= 2 <= λ")
    return SolveReport(Strategy.ORACLE_FALLBACK, cert.pair, validated=True, stage=6, detail="oracle")
