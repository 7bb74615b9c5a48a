"""
Branchings, good pairs and certificates, with the exhaustive oracle.

The oracle enumerates out-branchings (one in-arc per non-root vertex,
rejecting cycles) and, for each, decides in polynomial time whether the
remaining arcs contain an in-branching with an admissible root: an
in-branching rooted at r exists in D - A(O) iff every vertex reaches r
there. When in-branchings are estimated to be fewer, it runs on the
reversed digraph instead.
"""

import logging
import math
import time
from collections import Counter, deque
from dataclasses import dataclass, field, replace
from enum import StrEnum
from itertools import permutations

from django.conf import settings

from goodpairs.analysis import (
    NotSemicomplete,
    backward_reach,
    forward_reach,
    in_generators,
    is_semicomplete,
    out_generators,
)
from goodpairs.digraph import reverse
from goodpairs.figures import ST4

logger = logging.getLogger(__name__)

# How often (in enumerated branchings) the oracle looks at the clock
BUDGET_CHECK_INTERVAL = 4096


class BranchingError(Exception):
    """Base exception for branching enumeration and the oracle."""

    pass


class RootCannotReachAll(BranchingError):
    """Exception raised when no out-branching exists at the requested root."""

    pass


class BudgetExceeded(BranchingError):
    """Exception raised when a search runs out of time or enumeration budget."""

    def __init__(self, statistics, message="search budget exceeded"):
        self.statistics = statistics
        super().__init__(f"{message} ({statistics.summary()})")


class Orientation(StrEnum):
    OUT = "out"
    IN = "in"

    @property
    def opposite(self):
        return Orientation.IN if self is Orientation.OUT else Orientation.OUT


@dataclass(frozen=True)
class Branching:
    """
    A spanning out- or in-branching given by its arcs.

    For an out-branching every non-root vertex is the head of exactly one
    arc; for an in-branching it is the tail of exactly one arc.
    """

    orientation: Orientation
    root: int
    arcs: tuple

    @classmethod
    def of(cls, orientation, root, arcs):
        return cls(Orientation(orientation), root, tuple(sorted(arcs)))

    def reversed(self):
        """The same tree in the reversed digraph (orientation flips)."""
        return Branching.of(self.orientation.opposite, self.root, [(h, t) for t, h in self.arcs])

    def mapped(self, mapping):
        """Rename vertices through mapping (a sequence or dict)."""
        return Branching.of(self.orientation, mapping[self.root], [(mapping[t], mapping[h]) for t, h in self.arcs])


@dataclass(frozen=True)
class GoodPair:
    in_branching: Branching
    out_branching: Branching

    @classmethod
    def of(cls, in_root, in_arcs, out_root, out_arcs):
        return cls(Branching.of(Orientation.IN, in_root, in_arcs), Branching.of(Orientation.OUT, out_root, out_arcs))

    @property
    def in_root(self):
        return self.in_branching.root

    @property
    def out_root(self):
        return self.out_branching.root

    def reversed(self):
        """The corresponding good pair of the reversed digraph."""
        return GoodPair(self.out_branching.reversed(), self.in_branching.reversed())

    def mapped(self, mapping):
        return GoodPair(self.in_branching.mapped(mapping), self.out_branching.mapped(mapping))


@dataclass(frozen=True)
class Verdict:
    """Validation outcome; falsy on failure, with the first failure as reason."""

    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


class CertificateKind(StrEnum):
    PAIR_FOUND = "pair-found"
    EXCEPTION = "exception"
    FOUR_EXCEPTION = "four-exception"
    EXHAUSTED_SEARCH = "exhausted-search"


EXCEPTION_KINDS = (CertificateKind.EXCEPTION, CertificateKind.FOUR_EXCEPTION)


@dataclass
class SearchStatistics:
    out_branchings: int = 0
    roots_tried: int = 0
    side: str = "out"
    elapsed: float = 0.0
    reason: str = ""

    def summary(self):
        text = f"out_branchings={self.out_branchings} roots_tried={self.roots_tried} side={self.side}"
        text += f" elapsed={self.elapsed:.3f}"
        if self.reason:
            text += f" reason={self.reason.replace(' ', '_')}"
        return text


@dataclass(frozen=True)
class Certificate:
    """
    Why a good pair does or does not exist.

    PAIR_FOUND carries the pair; EXCEPTION and FOUR_EXCEPTION carry the
    witness (r, y, z) with N-(r) = {y} and N-(y) = {z}; EXHAUSTED_SEARCH
    carries the oracle statistics of a complete enumeration.
    """

    kind: CertificateKind
    root_in: int | None = None
    root_out: int | None = None
    pair: GoodPair | None = None
    witness: tuple | None = None
    statistics: SearchStatistics | None = None
    route: str = ""

    @property
    def found(self):
        return self.kind is CertificateKind.PAIR_FOUND

    def to_transcript(self, d=None):
        """Line-oriented transcript: CERT, IN/OUT or WITNESS, STAT."""
        name = d.label if d is not None else str

        def fmt_root(v):
            return "*" if v is None else name(v)

        head = f"CERT kind={self.kind} root_in={fmt_root(self.root_in)} root_out={fmt_root(self.root_out)}"
        if self.route:
            head += f" route={self.route}"
        lines = [head]
        if self.pair is not None:
            for tag, branching in (("IN", self.pair.in_branching), ("OUT", self.pair.out_branching)):
                arcs = ",".join(f"{name(t)}>{name(h)}" for t, h in branching.arcs)
                lines.append(f"{tag} root={name(branching.root)} arcs={arcs}")
        if self.witness is not None:
            r, y, z = self.witness
            lines.append(f"WITNESS r={name(r)} y={name(y)} z={name(z)}")
        if self.statistics is not None:
            lines.append(f"STAT {self.statistics.summary()}")
        return lines


def validate_branching(d, b, root=None):
    """
    Check that b is a spanning branching of d.

    Args:
        d: Host digraph
        b: Branching to check
        root: Optional required root

    Returns:
        Verdict: truthy when valid, else the first failure
    """
    if not 0 <= b.root < d.n:
        return Verdict(False, f"root {b.root} is not a vertex")
    if root is not None and b.root != root:
        return Verdict(False, f"root is {b.root}, expected {root}")
    if len(set(b.arcs)) != len(b.arcs):
        return Verdict(False, "an arc is listed twice")
    parent = {}
    for t, h in b.arcs:
        if not d.has_arc(t, h):
            return Verdict(False, f"arc ({t},{h}) is not in the digraph")
        child, up = (h, t) if b.orientation is Orientation.OUT else (t, h)
        if child == b.root:
            return Verdict(False, f"root {b.root} has a parent arc ({t},{h})")
        if child in parent:
            return Verdict(False, f"vertex {child} has two parent arcs")
        parent[child] = up
    for v in d.vertices:
        if v != b.root and v not in parent:
            return Verdict(False, f"not spanning: vertex {v} has no parent arc")
    for v in d.vertices:
        w, steps = v, 0
        while w != b.root:
            w = parent[w]
            steps += 1
            if steps > d.n:
                return Verdict(False, f"arcs through vertex {v} form a cycle")
    return Verdict(True)


def validate_good_pair(d, p, root_in=None, root_out=None):
    """Check that p is a pair of arc-disjoint branchings of d (as arc occurrences)."""
    if p.in_branching.orientation is not Orientation.IN:
        return Verdict(False, "first branching is not an in-branching")
    if p.out_branching.orientation is not Orientation.OUT:
        return Verdict(False, "second branching is not an out-branching")
    verdict = validate_branching(d, p.in_branching, root_in)
    if not verdict:
        return Verdict(False, f"in-branching: {verdict.reason}")
    verdict = validate_branching(d, p.out_branching, root_out)
    if not verdict:
        return Verdict(False, f"out-branching: {verdict.reason}")
    usage = Counter(p.in_branching.arcs) + Counter(p.out_branching.arcs)
    for (t, h), used in sorted(usage.items()):
        if used > d.multiplicity(t, h):
            return Verdict(False, f"arc ({t},{h}) used by both branchings")
    return Verdict(True)


def _out_branching_parents(d, root):
    """
    Yield parent lists of the out-branchings rooted at root.

    The same list object is yielded each time and mutated afterwards;
    callers copy what they keep.
    """
    order = [v for v in d.vertices if v != root]
    parent = [-1] * d.n

    def closes_cycle(u, v):
        w = u
        while w != -1 and w != root:
            if w == v:
                return True
            w = parent[w]
        return False

    def assign(i):
        if i == len(order):
            yield parent
            return
        v = order[i]
        for u in d.in_adj[v]:
            if not closes_cycle(u, v):
                parent[v] = u
                yield from assign(i + 1)
        parent[v] = -1

    yield from assign(0)


def enumerate_out_branchings(d, root):
    """
    Every out-branching of d rooted at root, each exactly once.

    Raises:
        RootCannotReachAll: If some vertex is unreachable from root
    """
    if forward_reach(d, root) != d.full_mask:
        raise RootCannotReachAll(f"vertex {root} does not reach every vertex")
    for parent in _out_branching_parents(d, root):
        yield Branching.of(Orientation.OUT, root, [(parent[v], v) for v in d.vertices if v != root])


def _residual_in_masks(d, parent):
    masks = list(d.in_masks)
    for v, u in enumerate(parent):
        if u >= 0 and d.multiplicity(u, v) == 1:
            masks[v] &= ~(1 << u)
    return masks


def _find_in_root(d, in_masks, candidates):
    """Lowest vertex of candidates reached by every vertex, or None."""
    while candidates:
        low = candidates & -candidates
        t = low.bit_length() - 1
        reach = backward_reach(d, t, in_masks)
        if reach == d.full_mask:
            return t
        candidates &= ~reach
    return None


def _in_branching_in_residual(d, parent, root):
    """BFS in-branching toward root using arc occurrences left over by parent."""
    left = Counter({pair: d.multiplicity(*pair) for pair in d.pairs()})
    for v, u in enumerate(parent):
        if u >= 0:
            left[(u, v)] -= 1
    arcs = []
    seen = {root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for u in d.in_adj[x]:
            if u not in seen and left[(u, x)] > 0:
                seen.add(u)
                arcs.append((u, x))
                queue.append(u)
    return arcs


def _estimate(d, orientation):
    degrees = (len(d.in_adj[v]) if orientation is Orientation.OUT else len(d.out_adj[v]) for v in d.vertices)
    return math.prod(max(k, 1) for k in degrees)


def oracle_good_pair(d, root_in=None, root_out=None, budget=None):
    """
    Decide whether d has a good pair with the given roots.

    Args:
        d: Digraph (multidigraphs allowed)
        root_in: Required in-branching root, or None for any
        root_out: Required out-branching root, or None for any
        budget: Optional Budget bounding wall-clock time

    Returns:
        Certificate: PAIR_FOUND with the pair, or EXHAUSTED_SEARCH

    Raises:
        BudgetExceeded: If time, the enumeration cap, or the order limit
            is exceeded; never reported as "no pair"
    """
    started = time.monotonic()
    statistics = SearchStatistics()
    if d.n > settings.BRANCHPAIR_ORACLE_MAX_VERTICES:
        statistics.reason = f"order {d.n} above oracle limit {settings.BRANCHPAIR_ORACLE_MAX_VERTICES}"
        raise BudgetExceeded(statistics)

    if _estimate(d, Orientation.IN) < _estimate(d, Orientation.OUT):
        cert = _oracle_one_side(reverse(d), root_out, root_in, budget, statistics)
        statistics.side = "in"
        statistics.elapsed = time.monotonic() - started
        pair = cert.pair.reversed() if cert.pair is not None else None
        cert = replace(cert, root_in=root_in, root_out=root_out, pair=pair)
    else:
        cert = _oracle_one_side(d, root_in, root_out, budget, statistics)
        statistics.elapsed = time.monotonic() - started

    logger.debug(f"Oracle on n={d.n} roots=({root_in},{root_out}): {cert.kind} [{statistics.summary()}]")
    return cert


def _oracle_one_side(d, root_in, root_out, budget, statistics):
    limit = settings.BRANCHPAIR_ORACLE_MAX_BRANCHINGS
    exhausted = Certificate(
        CertificateKind.EXHAUSTED_SEARCH, root_in=root_in, root_out=root_out, statistics=statistics
    )
    if d.n == 0:
        return exhausted
    if d.n == 1:
        pair = GoodPair.of(0, [], 0, [])
        return Certificate(CertificateKind.PAIR_FOUND, root_in, root_out, pair=pair, statistics=statistics)

    in_roots = in_generators(d)
    if root_in is not None:
        in_roots &= {root_in}
    out_roots = out_generators(d)
    if root_out is not None:
        out_roots &= {root_out}
    if not in_roots or not out_roots:
        statistics.reason = "no admissible root"
        return exhausted
    candidates = sum(1 << v for v in in_roots)

    for q in sorted(out_roots):
        statistics.roots_tried += 1
        for parent in _out_branching_parents(d, q):
            statistics.out_branchings += 1
            if statistics.out_branchings % BUDGET_CHECK_INTERVAL == 0 and budget is not None and budget.expired():
                statistics.reason = "time budget"
                raise BudgetExceeded(statistics)
            if statistics.out_branchings > limit:
                statistics.reason = "enumeration cap"
                raise BudgetExceeded(statistics)
            r = _find_in_root(d, _residual_in_masks(d, parent), candidates)
            if r is None:
                continue
            out_arcs = [(parent[v], v) for v in d.vertices if v != q]
            in_arcs = _in_branching_in_residual(d, parent, r)
            pair = GoodPair.of(r, in_arcs, q, out_arcs)
            return Certificate(CertificateKind.PAIR_FOUND, root_in, root_out, pair=pair, statistics=statistics)
    return exhausted


def is_exception(d, r):
    """
    The witness (y, z) when N-(r) = {y} and d-(y) = 1 (N-(y) = {z}), else None.

    Raises:
        NotSemicomplete: If d is not semicomplete
    """
    if not is_semicomplete(d):
        raise NotSemicomplete("exceptions are defined for semicomplete digraphs")
    if len(d.in_adj[r]) != 1 or d.in_degree(r) != 1:
        return None
    y = d.in_adj[r][0]
    if d.in_degree(y) != 1:
        return None
    return (y, d.in_adj[y][0])


def is_4_exception(d, a):
    """
    True iff (d, a) is a 4-exception.

    That is, under one of the six labelings sending the vertex a of the
    strong tournament on four vertices to a, d contains its arcs and at
    most the optional arcs dc and cb besides.
    """
    if d.n != 4 or any(arc.multiplicity > 1 for arc in d.arcs):
        return False
    present = set(d.pairs())
    others = [v for v in d.vertices if v != a]
    for images in permutations(others):
        mapping = dict(zip(ST4.names, (a, *images), strict=True))
        required = {(mapping[t], mapping[h]) for t, h in ST4.host_arcs}
        optional = {(mapping[t], mapping[h]) for t, h in ST4.optional_arcs}
        if required <= present <= required | optional:
            return True
    return False


@dataclass
class OracleCallCounter:
    """Counts oracle invocations and their outcomes for harness statistics."""

    calls: int = 0
    found: int = 0
    exhausted: int = 0
    branchings: int = 0
    by_kind: Counter = field(default_factory=Counter)

    def record(self, cert):
        self.calls += 1
        self.by_kind[str(cert.kind)] += 1
        if cert.found:
            self.found += 1
        else:
            self.exhausted += 1
        if cert.statistics is not None:
            self.branchings += cert.statistics.out_branchings
