"""
Shared plumbing for the constructive solvers: strategy tags, reports,
the mandatory self-check, tree growing and figure-table matching.
"""

import logging
from collections import deque
from dataclasses import dataclass
from enum import StrEnum
from itertools import permutations

from goodpairs.branchings import GoodPair, validate_good_pair

logger = logging.getLogger(__name__)


class SolverError(Exception):
    """Base exception for constructive solvers."""

    pass


class PreconditionViolated(SolverError):
    """Exception raised when the input is outside a construction's hypotheses."""

    pass


class SoundnessError(SolverError):
    """Exception raised when a construction yields an invalid pair or no pair at all."""

    pass


class Strategy(StrEnum):
    NON_STRONG_SEMICOMPLETE = "non-strong-semicomplete"
    EXCEPTION_THEOREM = "exception-theorem"
    UTIL_EXTENSION = "util-extension"
    EXTEND_LEMMA = "extend-lemma"
    SMALL_LOOKUP = "small-lookup"
    COBIPARTITE_CASE1 = "cobipartite-case1"
    COBIPARTITE_CASE2 = "cobipartite-case2"
    COBIPARTITE_CASE3 = "cobipartite-case3"
    ALPHA2_PIPELINE = "alpha2-pipeline"
    ORACLE_FALLBACK = "oracle-fallback"


@dataclass(frozen=True)
class SolveReport:
    """Which construction produced the pair, and its validation status."""

    strategy: Strategy
    pair: GoodPair
    validated: bool
    stage: int | None = None
    detail: str = ""

    def to_transcript(self, d=None):
        name = d.label if d is not None else str
        head = f"CERT kind=pair-found strategy={self.strategy} validated={str(self.validated).lower()}"
        if self.stage is not None:
            head += f" stage={self.stage}"
        if self.detail:
            head += f" route={self.detail}"
        lines = [head]
        for tag, branching in (("IN", self.pair.in_branching), ("OUT", self.pair.out_branching)):
            arcs = ",".join(f"{name(t)}>{name(h)}" for t, h in branching.arcs)
            lines.append(f"{tag} root={name(branching.root)} arcs={arcs}")
        return lines


def checked(d, pair, where, root_in=None, root_out=None):
    """
    Return pair after validating it in d.

    Raises:
        SoundnessError: If the pair is not a good pair of d
    """
    verdict = validate_good_pair(d, pair, root_in=root_in, root_out=root_out)
    if not verdict:
        logger.error(f"{where} produced an invalid pair: {verdict.reason}")
        raise SoundnessError(f"{where} produced an invalid pair: {verdict.reason}")
    return pair


def lift(pair, sub):
    """Map a pair of an induced subdigraph back to the parent's indices."""
    return pair.mapped(sub.back_map)


def out_tree(d, roots, within, usable=None):
    """
    Breadth-first out-forest from roots inside the vertex set within.

    Returns:
        tuple: (arcs, reached set)
    """
    reached = set(roots)
    queue = deque(sorted(roots))
    arcs = []
    while queue:
        u = queue.popleft()
        for w in d.out_adj[u]:
            if w in within and w not in reached and (usable is None or usable(u, w)):
                reached.add(w)
                arcs.append((u, w))
                queue.append(w)
    return arcs, reached


def in_tree(d, roots, within, usable=None):
    """Breadth-first in-forest toward roots inside within; returns (arcs, reached)."""
    reached = set(roots)
    queue = deque(sorted(roots))
    arcs = []
    while queue:
        w = queue.popleft()
        for u in d.in_adj[w]:
            if u in within and u not in reached and (usable is None or usable(u, w)):
                reached.add(u)
                arcs.append((u, w))
                queue.append(u)
    return arcs, reached


def embed_figure_pair(d, figure, fixed=None):
    """
    Find the drawn good pair of figure inside d.

    Tries every bijection from the figure's vertex names onto d's vertices
    (respecting fixed, a map from figure names to vertices) and returns
    the image of the pair as soon as all its arcs are arcs of d.

    Returns:
        GoodPair or None
    """
    if not figure.has_pair or len(figure.names) != d.n:
        return None
    fixed = fixed or {}
    free_names = [name for name in figure.names if name not in fixed]
    free_vertices = [v for v in d.vertices if v not in fixed.values()]
    pair_arcs = figure.in_arcs + figure.out_arcs
    for images in permutations(free_vertices):
        mapping = dict(fixed)
        mapping.update(zip(free_names, images, strict=True))
        if all(d.has_arc(mapping[t], mapping[h]) for t, h in pair_arcs):
            return GoodPair.of(
                mapping[figure.in_root],
                [(mapping[t], mapping[h]) for t, h in figure.in_arcs],
                mapping[figure.out_root],
                [(mapping[t], mapping[h]) for t, h in figure.out_arcs],
            )
    return None


def two_cycle_pair(u, v):
    """Good pair of the 2-cycle (u, v, u): in-branching uv, out-branching vu, both rooted at v."""
    return GoodPair.of(v, [(u, v)], v, [(v, u)])


def pair_vertices(pair):
    """Vertex set spanned by a pair."""
    vertices = {pair.in_root, pair.out_root}
    for t, h in pair.in_branching.arcs:
        vertices.update((t, h))
    return vertices
