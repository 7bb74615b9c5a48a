"""
Structural parameters and predicates of digraphs: strong components,
arc-connectivity, minimum semidegree, independence number, semicomplete
and co-bipartite recognition, generator sets, Hamiltonian paths and
cycles, and the Ramsey witness for nine or more vertices.
"""

import logging
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from goodpairs.digraph import to_networkx

logger = logging.getLogger(__name__)

INDEPENDENCE_MAX_VERTICES = 32
HAMILTONIAN_MAX_VERTICES = 16


class AnalysisError(Exception):
    """Base exception for analysis preconditions."""

    pass


class TooFewVertices(AnalysisError):
    """Exception raised when a parameter needs at least two vertices."""

    pass


class TooLarge(AnalysisError):
    """Exception raised when an exact search exceeds its order limit."""

    pass


class TooSmall(AnalysisError):
    """Exception raised when a statement needs a larger digraph."""

    pass


class NotStrong(AnalysisError):
    """Exception raised when a strong digraph is required."""

    pass


class NotSemicomplete(AnalysisError):
    """Exception raised when a semicomplete digraph is required."""

    pass


class NoSuchCycle(AnalysisError):
    """Exception raised when no cycle of the requested length exists."""

    pass


@dataclass(frozen=True)
class SccDecomposition:
    """
    Strong components numbered in topological order of the component DAG.

    components[i] is the vertex set of component i, component_of[v] the
    component holding v, and dag_arcs the arcs (i, j) of the condensation.
    """

    component_of: tuple
    components: tuple
    dag_arcs: frozenset
    initial: tuple
    terminal: tuple

    @property
    def count(self):
        return len(self.components)

    @property
    def is_strong(self):
        return len(self.components) == 1


@dataclass(frozen=True)
class CoBipartition:
    v1: frozenset
    v2: frozenset


@dataclass(frozen=True)
class RamseyWitness:
    kind: str  # "independent" or "clique"
    vertices: tuple


def strong_components(d):
    """
    Strong components of d with their condensation.

    Components are numbered along the lexicographic topological order of
    the condensation, breaking ties by lowest member vertex.
    """
    condensed = nx.condensation(to_networkx(d))
    lowest = {c: min(condensed.nodes[c]["members"]) for c in condensed}
    order = list(nx.lexicographical_topological_sort(condensed, key=lambda c: lowest[c]))
    renumber = {c: i for i, c in enumerate(order)}

    components = tuple(frozenset(condensed.nodes[c]["members"]) for c in order)
    component_of = [0] * d.n
    for i, members in enumerate(components):
        for v in members:
            component_of[v] = i
    dag_arcs = frozenset((renumber[a], renumber[b]) for a, b in condensed.edges)
    initial = tuple(i for i, c in enumerate(order) if condensed.in_degree(c) == 0)
    terminal = tuple(i for i, c in enumerate(order) if condensed.out_degree(c) == 0)
    return SccDecomposition(tuple(component_of), components, dag_arcs, initial, terminal)


def forward_reach(d, source, out_masks=None):
    """Bitmask of vertices reachable from source."""
    masks = d.out_masks if out_masks is None else out_masks
    seen = frontier = 1 << source
    while frontier:
        grown = 0
        while frontier:
            low = frontier & -frontier
            grown |= masks[low.bit_length() - 1]
            frontier ^= low
        frontier = grown & ~seen
        seen |= frontier
    return seen


def backward_reach(d, target, in_masks=None):
    """Bitmask of vertices that reach target."""
    return forward_reach(d, target, d.in_masks if in_masks is None else in_masks)


def is_strong(d):
    if d.n <= 1:
        return True
    return forward_reach(d, 0) == d.full_mask and backward_reach(d, 0) == d.full_mask


def in_generators(d):
    """In(D): vertices reachable from every other vertex."""
    return frozenset(v for v in d.vertices if backward_reach(d, v) == d.full_mask)


def out_generators(d):
    """Out(D): vertices reaching every other vertex."""
    return frozenset(v for v in d.vertices if forward_reach(d, v) == d.full_mask)


def arc_connectivity(d):
    """
    λ(D), the minimum number of arcs leaving a proper nonempty vertex set.

    Computed as the minimum over 2(n-1) max-flows between a fixed vertex
    and every other vertex, both directions, with arc multiplicity as the
    capacity.

    Raises:
        TooFewVertices: If d has fewer than 2 vertices
    """
    if d.n < 2:
        raise TooFewVertices(f"arc-connectivity needs at least 2 vertices, got {d.n}")
    if not is_strong(d):
        return 0
    g = to_networkx(d, capacity=True)
    best = None
    for u in range(1, d.n):
        for source, sink in ((0, u), (u, 0)):
            value = nx.maximum_flow_value(g, source, sink)
            best = value if best is None else min(best, value)
    return best


def min_semidegree(d):
    """δ⁰(D), the minimum over all vertices of in- and out-degree."""
    if d.n == 0:
        return 0
    return min(min(d.out_degree(v), d.in_degree(v)) for v in d.vertices)


def _neighbour_masks(d):
    return [d.out_masks[v] | d.in_masks[v] for v in d.vertices]


def _clique_cover_bound(candidates, neighbours):
    """Number of cliques in a greedy cover of candidates."""
    count = 0
    while candidates:
        low = candidates & -candidates
        clique_candidates = candidates & neighbours[low.bit_length() - 1]
        candidates ^= low
        while clique_candidates:
            nxt = clique_candidates & -clique_candidates
            clique_candidates &= neighbours[nxt.bit_length() - 1]
            candidates &= ~nxt
        count += 1
    return count


def independence_number(d):
    """
    α(D) with a maximum independent set.

    Branch-and-bound over vertex subsets; a greedy clique cover of the
    remaining candidates bounds how many more vertices can be added.

    Returns:
        tuple: (alpha, witness frozenset)

    Raises:
        TooLarge: If d has more than 32 vertices
    """
    if d.n > INDEPENDENCE_MAX_VERTICES:
        raise TooLarge(f"independence number search supports up to {INDEPENDENCE_MAX_VERTICES} vertices, got {d.n}")
    if d.n == 0:
        return 0, frozenset()
    neighbours = _neighbour_masks(d)
    best = [0, 0]

    def search(chosen, size, candidates):
        if not candidates:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + _clique_cover_bound(candidates, neighbours) <= best[0]:
            return
        low = candidates & -candidates
        v = low.bit_length() - 1
        search(chosen | low, size + 1, candidates & ~neighbours[v] & ~low)
        search(chosen, size, candidates & ~low)

    search(0, 0, d.full_mask)
    witness = frozenset(v for v in d.vertices if best[1] >> v & 1)
    return best[0], witness


def is_semicomplete(d):
    return all(d.adjacent(u, v) for u, v in combinations(d.vertices, 2))


def is_tournament(d):
    if d.is_multi and any(arc.multiplicity > 1 for arc in d.arcs):
        return False
    return all(d.has_arc(u, v) != d.has_arc(v, u) for u, v in combinations(d.vertices, 2))


def co_bipartition(d, nonempty=False):
    """
    Split V into two sets inducing semicomplete digraphs, if possible.

    The complement of the underlying graph is 2-coloured; in every
    component of it the lowest vertex goes to V1, and vertices adjacent to
    everything join V1. For a semicomplete d this yields (V, ∅); with
    nonempty=True that is normalized to (V minus its highest vertex,
    {highest vertex}).

    Returns:
        CoBipartition or None
    """
    underlying = to_networkx(d).to_undirected()
    complement = nx.complement(underlying)
    if not nx.is_bipartite(complement):
        return None
    v1, v2 = set(), set()
    for component in sorted(nx.connected_components(complement), key=min):
        colouring = nx.bipartite.color(complement.subgraph(component))
        home = colouring[min(component)]
        for v, colour in colouring.items():
            (v1 if colour == home else v2).add(v)
    if nonempty and not v2 and d.n >= 2:
        top = max(v1)
        v1.discard(top)
        v2.add(top)
    return CoBipartition(frozenset(v1), frozenset(v2))


def hamiltonian_path(d, fixed_start=None, fixed_end=None):
    """
    A directed Hamiltonian path honoring optional fixed endpoints.

    Backtracking that extends from the current end towards unvisited
    out-neighbours of smallest out-degree first; dead (visited-set, end)
    states are memoized.

    Returns:
        tuple of vertices, or None when no such path exists

    Raises:
        TooLarge: If d has more than 16 vertices
    """
    if d.n > HAMILTONIAN_MAX_VERTICES:
        raise TooLarge(f"Hamiltonian path search supports up to {HAMILTONIAN_MAX_VERTICES} vertices, got {d.n}")
    if d.n == 0:
        return None
    if d.n == 1:
        ok = fixed_start in (None, 0) and fixed_end in (None, 0)
        return (0,) if ok else None

    full = d.full_mask
    dead = set()
    successors = [sorted(d.out_adj[v], key=lambda w: (len(d.out_adj[w]), w)) for v in d.vertices]

    def extend(path, visited):
        end = path[-1]
        if visited == full:
            return fixed_end is None or end == fixed_end
        if end == fixed_end or (visited, end) in dead:
            return False
        for w in successors[end]:
            if not visited >> w & 1:
                path.append(w)
                if extend(path, visited | 1 << w):
                    return True
                path.pop()
        dead.add((visited, end))
        return False

    if fixed_start is not None:
        starts = [fixed_start]
    else:
        starts = sorted(d.vertices, key=lambda v: (len(d.in_adj[v]), v))
    for start in starts:
        path = [start]
        if extend(path, 1 << start):
            return tuple(path)
    logger.debug(f"No Hamiltonian path in {d!r} (start={fixed_start}, end={fixed_end})")
    return None


def hamiltonian_cycle_through(d, v, length=None):
    """
    A directed cycle of the given length through v in a strong semicomplete digraph.

    Defaults to a Hamiltonian cycle. Successors are tried in increasing
    index order, so the result is the lexicographically first such cycle.

    Returns:
        tuple: the closed vertex sequence (v, ..., v)

    Raises:
        NotSemicomplete, NotStrong, NoSuchCycle
    """
    if not is_semicomplete(d):
        raise NotSemicomplete("cycle search needs a semicomplete digraph")
    if d.n < 2 or not is_strong(d):
        raise NotStrong("cycle search needs a strong digraph on at least 2 vertices")
    length = d.n if length is None else length
    if not 2 <= length <= d.n:
        raise NoSuchCycle(f"no cycle of length {length} in a digraph on {d.n} vertices")

    path = [v]

    def extend(visited):
        end = path[-1]
        if len(path) == length:
            return d.has_arc(end, v)
        for w in d.out_adj[end]:
            if not visited >> w & 1:
                path.append(w)
                if extend(visited | 1 << w):
                    return True
                path.pop()
        return False

    if not extend(1 << v):
        raise NoSuchCycle(f"no cycle of length {length} through vertex {v}")
    return (*path, v)


def ramsey_witness(d):
    """
    An independent 3-set or a 4-clique, one of which exists from 9 vertices on.

    Independent sets are searched first, in lexicographic order.

    Raises:
        TooSmall: If d has fewer than 9 vertices
    """
    if d.n < 9:
        raise TooSmall(f"the Ramsey bound needs at least 9 vertices, got {d.n}")
    for triple in combinations(d.vertices, 3):
        if not any(d.adjacent(u, w) for u, w in combinations(triple, 2)):
            return RamseyWitness("independent", triple)
    for quad in combinations(d.vertices, 4):
        if all(d.adjacent(u, w) for u, w in combinations(quad, 2)):
            return RamseyWitness("clique", quad)
    raise AnalysisError("neither an independent 3-set nor a 4-clique found")
