"""
Immutable digraphs with arc multiplicities, induced subdigraphs,
reversal and the text/DOT serializations.

Vertices are dense integers 0..n-1. Induced subdigraphs record a back-map
to the parent's indices and carry vertex labels along, so results can be
reported under the names used in the figures (a1, c2, ...).
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property

import networkx as nx

logger = logging.getLogger(__name__)


class DigraphError(Exception):
    """Base exception for invalid digraph construction or input."""

    pass


class LoopArc(DigraphError):
    """Exception raised when an arc has equal tail and head."""

    pass


class DuplicateArcInSimpleDigraph(DigraphError):
    """Exception raised when a simple digraph receives a parallel arc."""

    pass


class VertexOutOfRange(DigraphError):
    """Exception raised when an arc endpoint is not a vertex."""

    pass


class ArcAbsent(DigraphError):
    """Exception raised when removing an arc that is not present."""

    pass


class EmptySubset(DigraphError):
    """Exception raised when inducing on an empty vertex set."""

    pass


class TextFormatError(DigraphError):
    """Exception raised for a malformed line of the text format."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class InconsistentHeader(DigraphError):
    """Exception raised when the header or vertex count line is invalid."""

    pass


HEADER_SIMPLE = "digraph"
HEADER_MULTI = "multidigraph"


@dataclass(frozen=True, order=True)
class Arc:
    """An arc (tail, head) with its multiplicity."""

    tail: int
    head: int
    multiplicity: int = 1

    @property
    def pair(self):
        return (self.tail, self.head)


class DiGraph:
    """
    A loopless digraph on vertices 0..n-1.

    Arcs are kept sorted by (tail, head); parallel arcs are represented by
    multiplicity and only allowed when is_multi is set. Instances are
    immutable: every mutation helper returns a new DiGraph.
    """

    def __init__(self, n, counts, is_multi=False, labels=None, back_map=None):
        self.n = n
        self._mult = dict(sorted(counts.items()))
        self.arcs = tuple(Arc(t, h, m) for (t, h), m in self._mult.items())
        self.is_multi = is_multi
        self.labels = tuple(labels) if labels is not None else None
        self.back_map = tuple(back_map) if back_map is not None else None

    def __repr__(self):
        kind = HEADER_MULTI if self.is_multi else HEADER_SIMPLE
        return f"<DiGraph {kind} n={self.n} arcs={self.arc_count}>"

    def __eq__(self, other):
        if not isinstance(other, DiGraph):
            return NotImplemented
        return (self.n, self.arcs, self.is_multi) == (other.n, other.arcs, other.is_multi)

    def __hash__(self):
        return hash((self.n, self.arcs, self.is_multi))

    @property
    def vertices(self):
        return range(self.n)

    @cached_property
    def arc_count(self):
        """Total number of arcs, counting multiplicity."""
        return sum(self._mult.values())

    @cached_property
    def out_adj(self):
        adj = [[] for _ in range(self.n)]
        for tail, head in self._mult:
            adj[tail].append(head)
        return tuple(tuple(heads) for heads in adj)

    @cached_property
    def in_adj(self):
        adj = [[] for _ in range(self.n)]
        for tail, head in self._mult:
            adj[head].append(tail)
        return tuple(tuple(sorted(tails)) for tails in adj)

    @cached_property
    def out_masks(self):
        """Out-neighbourhoods as bitmasks (bit v set when the arc to v exists)."""
        return tuple(sum(1 << v for v in heads) for heads in self.out_adj)

    @cached_property
    def in_masks(self):
        return tuple(sum(1 << u for u in tails) for tails in self.in_adj)

    @cached_property
    def full_mask(self):
        return (1 << self.n) - 1

    def pairs(self):
        """Distinct (tail, head) pairs in sorted order."""
        return list(self._mult)

    def occurrences(self):
        """Every arc occurrence as a (tail, head) pair, repeated by multiplicity."""
        return [pair for pair, m in self._mult.items() for _ in range(m)]

    def has_arc(self, tail, head):
        return (tail, head) in self._mult

    def multiplicity(self, tail, head):
        return self._mult.get((tail, head), 0)

    def out_degree(self, v):
        return sum(self._mult[(v, w)] for w in self.out_adj[v])

    def in_degree(self, v):
        return sum(self._mult[(u, v)] for u in self.in_adj[v])

    def adjacent(self, u, v):
        return (u, v) in self._mult or (v, u) in self._mult

    def label(self, v):
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def vertex(self, name):
        """
        Resolve a vertex by label or by decimal index.

        Raises:
            VertexOutOfRange: If no vertex carries that name
        """
        if self.labels is not None and name in self.labels:
            return self.labels.index(name)
        try:
            index = int(name)
        except (TypeError, ValueError):
            raise VertexOutOfRange(f"unknown vertex {name!r}") from None
        if not 0 <= index < self.n:
            raise VertexOutOfRange(f"vertex {index} not in 0..{self.n - 1}")
        return index

    def original(self, v):
        """Index of v in the digraph this one was induced from."""
        return v if self.back_map is None else self.back_map[v]


def _check_endpoints(n, tail, head):
    if not (0 <= tail < n and 0 <= head < n):
        raise VertexOutOfRange(f"arc ({tail},{head}) has an endpoint outside 0..{n - 1}")
    if tail == head:
        raise LoopArc(f"loop at vertex {tail}")


def build(n, arc_list, multi=False, labels=None):
    """
    Build a digraph from (tail, head) pairs.

    Args:
        n: Vertex count
        arc_list: Iterable of (tail, head) pairs; a repeated pair raises
            the multiplicity of that arc
        multi: Allow parallel arcs
        labels: Optional vertex names, one per vertex

    Returns:
        DiGraph: the digraph with arcs sorted by (tail, head)

    Raises:
        LoopArc, VertexOutOfRange, DuplicateArcInSimpleDigraph
    """
    if labels is not None and len(labels) != n:
        raise DigraphError(f"expected {n} labels, got {len(labels)}")
    counts = Counter()
    for tail, head in arc_list:
        _check_endpoints(n, tail, head)
        if counts[(tail, head)] and not multi:
            raise DuplicateArcInSimpleDigraph(f"arc ({tail},{head}) given twice in a simple digraph")
        counts[(tail, head)] += 1
    return DiGraph(n, counts, is_multi=multi, labels=labels)


def build_labeled(names, arc_names, multi=False):
    """Build a digraph from vertex names and arcs given as name pairs."""
    index = {name: i for i, name in enumerate(names)}
    return build(len(names), [(index[t], index[h]) for t, h in arc_names], multi=multi, labels=names)


def induced(d, subset):
    """
    Subdigraph induced by subset, reindexed densely in increasing order.

    The result's back_map sends each new index to its index in d.
    """
    chosen = sorted(set(subset))
    if not chosen:
        raise EmptySubset("cannot induce a subdigraph on an empty vertex set")
    for v in chosen:
        if not 0 <= v < d.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{d.n - 1}")
    position = {v: i for i, v in enumerate(chosen)}
    counts = {
        (position[t], position[h]): m for (t, h), m in d._mult.items() if t in position and h in position
    }
    labels = [d.label(v) for v in chosen] if d.labels is not None else None
    return DiGraph(len(chosen), counts, is_multi=d.is_multi, labels=labels, back_map=chosen)


def reverse(d):
    """The digraph with every arc reversed."""
    counts = {(h, t): m for (t, h), m in d._mult.items()}
    return DiGraph(d.n, counts, is_multi=d.is_multi, labels=d.labels, back_map=d.back_map)


def add_arc(d, tail, head):
    _check_endpoints(d.n, tail, head)
    if d.has_arc(tail, head) and not d.is_multi:
        raise DuplicateArcInSimpleDigraph(f"arc ({tail},{head}) already present")
    counts = dict(d._mult)
    counts[(tail, head)] = counts.get((tail, head), 0) + 1
    return DiGraph(d.n, counts, is_multi=d.is_multi, labels=d.labels, back_map=d.back_map)


def remove_arc(d, tail, head):
    """Remove one occurrence of the arc (tail, head)."""
    return remove_arcs(d, [(tail, head)])


def remove_arcs(d, arcs):
    """
    Remove one occurrence per listed arc.

    Raises:
        ArcAbsent: If an arc (or one more occurrence of it) is missing
    """
    counts = dict(d._mult)
    for tail, head in arcs:
        if counts.get((tail, head), 0) == 0:
            raise ArcAbsent(f"arc ({tail},{head}) is not in the digraph")
        counts[(tail, head)] -= 1
        if counts[(tail, head)] == 0:
            del counts[(tail, head)]
    return DiGraph(d.n, counts, is_multi=d.is_multi, labels=d.labels, back_map=d.back_map)


def union(parts, extra_arcs=(), identify=None):
    """
    Disjoint union of digraphs plus extra arcs.

    Args:
        parts: Sequence of (prefix, DiGraph); labels become prefix + label
        extra_arcs: Arcs between parts, given as label pairs of the result
        identify: Optional list of label groups to merge into one vertex
            (the first label of each group is kept)

    Returns:
        DiGraph: the combined labeled digraph
    """
    names = []
    counts = Counter()
    multi = False
    for prefix, part in parts:
        offset = len(names)
        names.extend(f"{prefix}{part.label(v)}" for v in part.vertices)
        for (t, h), m in part._mult.items():
            counts[(t + offset, h + offset)] += m
        multi = multi or part.is_multi
    index = {name: i for i, name in enumerate(names)}
    for t, h in extra_arcs:
        counts[(index[t], index[h])] += 1

    if identify:
        keep = {}
        for group in identify:
            for name in group[1:]:
                keep[index[name]] = index[group[0]]
        survivors = [v for v in range(len(names)) if v not in keep]
        position = {v: i for i, v in enumerate(survivors)}
        merged = Counter()
        for (t, h), m in counts.items():
            merged[(position[keep.get(t, t)], position[keep.get(h, h)])] += m
        names = [names[v] for v in survivors]
        counts = merged

    for (t, h), m in counts.items():
        if t == h:
            raise LoopArc(f"union creates a loop at {names[t]}")
        if m > 1 and not multi:
            raise DuplicateArcInSimpleDigraph(f"union creates parallel arcs {names[t]}->{names[h]}")
    return DiGraph(len(names), counts, is_multi=multi, labels=names)


def parse_text(content):
    """
    Parse the line-oriented text format.

    Line 1 is "digraph" or "multidigraph", line 2 the vertex count, then one
    "tail head" pair per line. Blank lines and "#" comments are ignored,
    except "# label <index> <name>" which names a vertex.

    Args:
        content: str or bytes (UTF-8)

    Returns:
        DiGraph

    Raises:
        InconsistentHeader: On a missing or unknown header or vertex count
        TextFormatError: On a malformed arc or label line, or bytes that are not UTF-8
    """
    if isinstance(content, bytes):
        try:
            content = content.decode("utf-8")
        except UnicodeDecodeError as e:
            line = content.count(b"\n", 0, e.start) + 1
            raise TextFormatError(line, f"invalid UTF-8 at byte {e.start}") from e

    header = None
    n = None
    arcs = []
    labels = {}
    for number, raw in enumerate(content.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            fields = line[1:].split()
            if fields[:1] == ["label"]:
                if len(fields) != 3 or not fields[1].isdigit():
                    raise TextFormatError(number, f"bad label line {raw!r}")
                labels[int(fields[1])] = fields[2]
            continue
        if not line:
            continue
        if header is None:
            if line not in (HEADER_SIMPLE, HEADER_MULTI):
                raise InconsistentHeader(f"line {number}: expected 'digraph' or 'multidigraph', got {line!r}")
            header = line
            continue
        if n is None:
            if not line.isdigit():
                raise InconsistentHeader(f"line {number}: vertex count must be a non-negative integer, got {line!r}")
            n = int(line)
            continue
        fields = line.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise TextFormatError(number, f"expected 'tail head', got {raw!r}")
        arcs.append((int(fields[0]), int(fields[1])))

    if header is None or n is None:
        raise InconsistentHeader("missing header or vertex count")
    names = None
    if labels:
        if any(not 0 <= v < n for v in labels):
            raise VertexOutOfRange(f"label for a vertex outside 0..{n - 1}")
        names = [labels.get(v, str(v)) for v in range(n)]
    d = build(n, arcs, multi=header == HEADER_MULTI, labels=names)
    logger.debug(f"Parsed {d!r}")
    return d


def emit_text(d):
    """Serialize d to the text format (labels as "# label" comments)."""
    lines = [HEADER_MULTI if d.is_multi else HEADER_SIMPLE, str(d.n)]
    if d.labels is not None:
        lines.extend(f"# label {v} {name}" for v, name in enumerate(d.labels))
    lines.extend(f"{t} {h}" for t, h in d.occurrences())
    return "\n".join(lines) + "\n"


class ArcRole(StrEnum):
    IN_BRANCH = "in"
    OUT_BRANCH = "out"
    UNUSED = "unused"


DOT_COLORS = {ArcRole.IN_BRANCH: "red", ArcRole.OUT_BRANCH: "blue", ArcRole.UNUSED: "black"}


def label_arcs(d, in_arcs=(), out_arcs=()):
    """
    Label every arc occurrence of d as in-branch, out-branch or unused.

    Occurrences are keyed (tail, head, k) with k counting parallel copies
    from 0. In-branch arcs take the lowest copies, out-branch arcs the next.

    Raises:
        ArcAbsent: If the branchings need more copies of an arc than d has
    """
    labeling = {}
    for (t, h), m in d._mult.items():
        roles = [ArcRole.IN_BRANCH] * list(in_arcs).count((t, h))
        roles += [ArcRole.OUT_BRANCH] * list(out_arcs).count((t, h))
        if len(roles) > m:
            raise ArcAbsent(f"arc ({t},{h}) used {len(roles)} times but has multiplicity {m}")
        roles += [ArcRole.UNUSED] * (m - len(roles))
        for k, role in enumerate(roles):
            labeling[(t, h, k)] = role
    return labeling


def emit_dot(d, highlight=None, name="D"):
    """
    Serialize d to DOT.

    With a GoodPair as highlight, in-branching arcs are red, out-branching
    arcs blue and every other arc black. Parallel arcs are drawn once per
    occurrence.
    """
    if highlight is None:
        labeling = label_arcs(d)
    else:
        labeling = label_arcs(d, highlight.in_branching.arcs, highlight.out_branching.arcs)

    lines = [f"digraph {name} {{"]
    for v in d.vertices:
        lines.append(f'  {v} [label="{d.label(v)}"];')
    for (t, h, _k), role in labeling.items():
        lines.append(f"  {t} -> {h} [color={DOT_COLORS[role]}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_networkx(d, capacity=False):
    """networkx.DiGraph view of d; multiplicity becomes the capacity attribute."""
    g = nx.DiGraph()
    g.add_nodes_from(d.vertices)
    if capacity:
        g.add_edges_from((t, h, {"capacity": m}) for (t, h), m in d._mult.items())
    else:
        g.add_edges_from(d._mult)
    return g

