"""
Generators for the named digraphs and the parameterized counterexample
families, each with the parameters the construction is known to have.

A family is addressed by a FamilySpec, written on the command line as
"Name" or "Name:key=value,key=value" (for example "WPrimeN:n=10").
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass, field

from goodpairs.analysis import (
    arc_connectivity,
    co_bipartition,
    independence_number,
    is_strong,
    min_semidegree,
)
from goodpairs.digraph import build_labeled, union
from goodpairs.figures import D_MINUS, D_PLUS, E4, F4, ORDER_SIX, SIX_OK, SIX_VERTEX, ST4, TT4

logger = logging.getLogger(__name__)


class FamilyError(Exception):
    """Base exception for family generation."""

    pass


class InvalidParameters(FamilyError):
    """Exception raised for an unknown family or parameters outside its range."""

    pass


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple = ()

    @classmethod
    def parse(cls, text):
        """Parse "Name" or "Name:key=value,..."; integer values are converted."""
        name, _, rest = text.strip().partition(":")
        params = []
        for item in filter(None, (part.strip() for part in rest.split(","))):
            key, sep, value = item.partition("=")
            if not sep or not key:
                raise InvalidParameters(f"expected key=value, got '{item}'")
            params.append((key.strip(), int(value) if value.strip().lstrip("-").isdigit() else value.strip()))
        return cls(name, tuple(sorted(params)))

    def __str__(self):
        if not self.params:
            return self.name
        return f"{self.name}:" + ",".join(f"{key}={value}" for key, value in self.params)


# Building blocks


def strong_semicomplete(m, prefix="s"):
    """
    Default strong semicomplete digraph on m vertices.

    One vertex, the 2-cycle, or a rotational tournament; for even m >= 4
    the diametric pairs are oriented i -> i + m/2 for i < m/2.
    """
    if m < 1:
        raise InvalidParameters(f"a strong semicomplete digraph needs at least one vertex, got {m}")
    names = [f"{prefix}{i}" for i in range(m)]
    if m == 2:
        return build_labeled(names, [(names[0], names[1]), (names[1], names[0])])
    arcs = [(names[i], names[(i + j) % m]) for i in range(m) for j in range(1, (m - 1) // 2 + 1)]
    if m % 2 == 0:
        arcs.extend((names[i], names[i + m // 2]) for i in range(m // 2))
    return build_labeled(names, arcs)


def complete_digraph(m, prefix="x"):
    names = [f"{prefix}{i + 1}" for i in range(m)]
    return build_labeled(names, [(t, h) for t in names for h in names if t != h])


W_NAMES = ("a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2")
W_ARCS = (
    # H1: 4-cycle a1 b1 c1 d1, 2-cycle a1 c1, arc d1 b1
    ("a1", "b1"), ("b1", "c1"), ("c1", "d1"), ("d1", "a1"), ("a1", "c1"), ("c1", "a1"), ("d1", "b1"),
    # H2: 4-cycle a2 d2 c2 b2, 2-cycle a2 c2, arc b2 d2
    ("a2", "d2"), ("d2", "c2"), ("c2", "b2"), ("b2", "a2"), ("a2", "c2"), ("c2", "a2"), ("b2", "d2"),
    # connecting 4-cycle d1 d2 b1 b2
    ("d1", "d2"), ("d2", "b1"), ("b1", "b2"), ("b2", "d1"),
)  # fmt: skip


def w_digraph():
    """2-arc-strong co-bipartite digraph with no B- at c1 arc-disjoint from a B+ at c2."""
    return build_labeled(list(W_NAMES), W_ARCS)


def h4_digraph():
    """Two opposite 5-cycles a1..a5 and b5..b1 joined by the 2-cycles a_i b_i."""
    names = [f"a{i}" for i in range(1, 6)] + [f"b{i}" for i in range(1, 6)]
    arcs = []
    for i in range(1, 6):
        after = i % 5 + 1
        arcs.extend([(f"a{i}", f"a{after}"), (f"b{after}", f"b{i}"), (f"a{i}", f"b{i}"), (f"b{i}", f"a{i}")])
    return build_labeled(names, arcs)


def w_prime(n, s=None):
    """
    W plus a strong semicomplete S on n - 8 vertices, all arcs S -> c2 and c1 -> S.

    s overrides the default S; its order must be n - 8.
    """
    if n < 9:
        raise InvalidParameters(f"WPrimeN needs n >= 9, got {n}")
    s = s if s is not None else strong_semicomplete(n - 8)
    if s.n != n - 8:
        raise InvalidParameters(f"S must have {n - 8} vertices, got {s.n}")
    s_names = [s.label(v) for v in s.vertices]
    extra = [(v, "c2") for v in s_names] + [("c1", v) for v in s_names]
    return union([("", w_digraph()), ("", s)], extra_arcs=extra)


def w_s(s=None, m=2):
    """Three copies of W around a strong semicomplete S: S -> each c2, each c1 -> S."""
    s = s if s is not None else strong_semicomplete(m)
    s_names = [s.label(v) for v in s.vertices]
    parts = [("", s)] + [(f"w{copy}.", w_digraph()) for copy in (1, 2, 3)]
    extra = []
    for copy in (1, 2, 3):
        extra.extend((v, f"w{copy}.c2") for v in s_names)
        extra.extend((f"w{copy}.c1", v) for v in s_names)
    return union(parts, extra_arcs=extra)


def strong_not_enough_block(k, t1=None, t2=None):
    """
    Tournament H built on v and two strong tournaments T1, T2 with semidegree k.

    v dominates T1, T2 dominates v, and T2 dominates T1 except for the
    single arc x y from the first vertex of T1 to the first vertex of T2.
    Every (v, v)-pair needs x y in both branchings.
    """
    if k < 1:
        raise InvalidParameters(f"StrongNotEnough needs k >= 1, got {k}")
    t1 = t1 if t1 is not None else strong_semicomplete(2 * k + 1, "p")
    t2 = t2 if t2 is not None else strong_semicomplete(2 * k + 1, "q")
    first = [t1.label(v) for v in t1.vertices]
    second = [t2.label(v) for v in t2.vertices]
    x, y = first[0], second[0]
    extra = [("v", a) for a in first] + [(b, "v") for b in second]
    extra.extend((b, a) for b in second for a in first if (a, b) != (x, y))
    extra.append((x, y))
    single = build_labeled(["v"], [])
    return union([("", single), ("", t1), ("", t2)], extra_arcs=extra)


def strong_not_enough(k, t1=None, t2=None):
    """Two copies of the block joined by the 2-cycle between their v vertices."""
    block = strong_not_enough_block(k, t1, t2)
    return union([("1.", block), ("2.", block)], extra_arcs=[("1.v", "2.v"), ("2.v", "1.v")])


def no_branch_u(base, s, t, r=2):
    """
    Three copies of H' identified at one vertex x.

    H' is base when s == t (then x = s); otherwise base plus a complete
    digraph X on r vertices with every arc X -> s and t -> X, x being the
    first vertex of X.

    Returns:
        tuple: (DiGraph, index of the identified vertex)
    """
    labels = [base.label(v) for v in base.vertices]
    for name in (s, t):
        if name not in labels:
            raise InvalidParameters(f"vertex '{name}' is not in the base digraph")
    if s == t:
        h_prime, x = base, s
    else:
        if r < 1:
            raise InvalidParameters(f"NoBranchU needs R >= 1, got {r}")
        clique = complete_digraph(r, prefix="x")
        clique_names = [clique.label(v) for v in clique.vertices]
        extra = [(v, s) for v in clique_names] + [(t, v) for v in clique_names]
        h_prime, x = union([("", base), ("", clique)], extra_arcs=extra), clique_names[0]
    u = union([(f"u{copy}.", h_prime) for copy in (1, 2, 3)], identify=[[f"u{copy}.{x}" for copy in (1, 2, 3)]])
    return u, [u.label(v) for v in u.vertices].index(f"u1.{x}")


def bad_multi():
    """Multidigraph with no out-branching at s arc-disjoint from an in-branching at s."""
    names = ["s", "a", "b", "c", "d", "e"]
    arcs = [
        ("a", "b"), ("a", "c"), ("b", "c"), ("c", "d"), ("c", "e"), ("d", "e"),
        ("s", "a"), ("s", "a"), ("e", "s"), ("e", "s"), ("b", "d"), ("d", "b"),
    ]  # fmt: skip
    return build_labeled(names, arcs, multi=True)


def k24_doubled():
    """K_{2,4} with every edge replaced by a 2-cycle."""
    names = ["u1", "u2", "v1", "v2", "v3", "v4"]
    arcs = []
    for u in names[:2]:
        for v in names[2:]:
            arcs.extend([(u, v), (v, u)])
    return build_labeled(names, arcs)


# Registry


FOUR_EXCEPTION_VARIANTS = {"plain": (), "dc": (("d", "c"),), "cb": (("c", "b"),), "both": (("d", "c"), ("c", "b"))}


def four_exception(variant="plain"):
    """ST4 plus the chosen optional arcs; none of them has a good a-pair."""
    if variant not in FOUR_EXCEPTION_VARIANTS:
        raise InvalidParameters(f"FourException variant must be one of {sorted(FOUR_EXCEPTION_VARIANTS)}")
    return build_labeled(list(ST4.names), ST4.host_arcs + FOUR_EXCEPTION_VARIANTS[variant])


def _figure_host(figures, family):
    by_variant = {figure.name.split("-", 1)[-1]: figure for figure in figures}

    def build(variant):
        if str(variant) not in by_variant:
            raise InvalidParameters(f"{family} variant must be one of {sorted(by_variant)}")
        return by_variant[str(variant)].host()

    return build


def _no_branch_u(base, s, t, R):
    bases = {"W": w_digraph, "BadMulti": bad_multi}
    if base not in bases:
        raise InvalidParameters(f"NoBranchU base must be one of {sorted(bases)}, got '{base}'")
    return no_branch_u(bases[base](), s, t, R)[0]


@dataclass(frozen=True)
class Family:
    """
    A named construction.

    builder and a callable declared take the family's parameters as
    keywords; declared maps parameter names (lambda, alpha, delta0,
    delta0_min, strong, cobipartite) to the values the construction has.
    """

    name: str
    builder: Callable
    declared: dict | Callable = field(default_factory=dict)
    defaults: dict = field(default_factory=dict)
    description: str = ""

    def declared_for(self, params):
        return self.declared(**params) if callable(self.declared) else dict(self.declared)


def _declared_w_prime(n):
    return {"lambda": 2 if n >= 10 else 1, "alpha": 3}


def _declared_ws(m):
    return {"lambda": min(2, m), "alpha": 7}


def _declared_block(k):
    return {"strong": True, "delta0_min": k}


def _declared_strong_not_enough(k):
    return {"strong": True, "cobipartite": True, "delta0_min": k}


def _declared_no_branch_u(base, s, t, R):
    if base != "W" or s == t:
        return {}
    return {"lambda": R}


FAMILIES = {
    family.name: family
    for family in (
        Family("ST4", ST4.host, {"lambda": 1, "alpha": 1, "delta0": 1},
               description="strong tournament on four vertices"),
        Family("FourException", four_exception, {"strong": True}, {"variant": "plain"},
               "ST4 with optional arcs dc and cb; no good a-pair"),
        Family("E4", E4.host, {"lambda": 1, "alpha": 2, "delta0": 1},
               description="two 2-cycles joined by two arcs; no good pair"),
        Family("F4", F4.host, {"alpha": 2}, description="two 2-cycles joined by bc and ad"),
        Family("TT4", TT4.host, {"lambda": 0, "alpha": 1}, description="transitive tournament on four vertices"),
        Family("Dplus", D_PLUS.host, {"lambda": 0, "alpha": 1}, description="3-cycle dominated by a source"),
        Family("Dminus", D_MINUS.host, {"lambda": 0, "alpha": 1}, description="3-cycle dominating a sink"),
        Family("W", w_digraph, {"lambda": 2, "alpha": 2, "cobipartite": True},
               description="no B- at c1 arc-disjoint from a B+ at c2"),
        Family("H4", h4_digraph, {"lambda": 2, "alpha": 4}, description="two 5-cycles joined by 2-cycles; no good pair"),
        Family("WPrimeN", w_prime, _declared_w_prime, {"n": 10}, "W plus S; no B+_s, B-_t arc-disjoint for s, t in S"),
        Family("WS", w_s, _declared_ws, {"m": 2}, "three copies of W around S; no good pair"),
        Family("StrongNotEnough", strong_not_enough, _declared_strong_not_enough, {"k": 1},
               "co-bipartite, semidegree at least k, no good pair"),
        Family("StrongNotEnoughBlock", strong_not_enough_block, _declared_block, {"k": 1},
               "tournament with no good (v, v)-pair"),
        Family("NoBranchU", _no_branch_u, _declared_no_branch_u, {"base": "W", "s": "c2", "t": "c1", "R": 2},
               "three copies identified at x; no B+ at x arc-disjoint from B- at x"),
        Family("BadMulti", bad_multi, {"lambda": 2, "alpha": 2}, description="multidigraph with no good (s, s)-pair"),
        Family("Fig6Vertex", _figure_host(SIX_VERTEX, "Fig6Vertex"), {"delta0": 2, "cobipartite": True},
               {"variant": "left"}, "two 3-cycles joined by three 2-cycles"),
        Family("FigOrder6", _figure_host(ORDER_SIX, "FigOrder6"), {"delta0": 2, "cobipartite": True},
               {"variant": 1}, "co-bipartite of order six without 2-cycles"),
        Family("Fig6OK", _figure_host(SIX_OK, "Fig6OK"), {"alpha": 3}, {"variant": "prime"},
               "arcs of a drawn good pair on six vertices"),
        Family("K24Doubled", k24_doubled, {"lambda": 2, "alpha": 4, "delta0": 2},
               description="K2,4 with every edge a 2-cycle"),
    )
}  # fmt: skip


def _resolve(spec):
    family = FAMILIES.get(spec.name)
    if family is None:
        raise InvalidParameters(f"unknown family '{spec.name}'; choose from {', '.join(FAMILIES)}")
    params = dict(family.defaults)
    for key, value in spec.params:
        if key not in family.defaults:
            raise InvalidParameters(f"family {spec.name} takes no parameter '{key}'")
        params[key] = value
    for key in ("n", "m", "k", "R"):
        if key in params and not isinstance(params[key], int):
            raise InvalidParameters(f"parameter {key} must be an integer, got '{params[key]}'")
    return family, params


def generate(spec):
    """
    Build the digraph named by spec.

    Args:
        spec: FamilySpec or its text form

    Returns:
        DiGraph: labeled with the construction's vertex names

    Raises:
        InvalidParameters: For an unknown family or parameters out of range
    """
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    family, params = _resolve(spec)
    d = family.builder(**params)
    logger.debug(f"Generated {spec}: {d.n} vertices, {d.arc_count} arcs")
    return d


@dataclass(frozen=True)
class SanityCheck:
    parameter: str
    declared: object
    actual: object

    @property
    def ok(self):
        if self.parameter == "delta0_min":
            return self.actual >= self.declared
        return self.actual == self.declared

    def to_line(self, family):
        return (
            f"STAT family={family} {self.parameter}={self.actual} declared={self.declared} ok={str(self.ok).lower()}"
        )


@dataclass(frozen=True)
class SanityReport:
    spec: FamilySpec
    n: int
    arc_count: int
    checks: tuple

    @property
    def ok(self):
        return all(check.ok for check in self.checks)

    def to_lines(self):
        lines = [f"STAT family={self.spec} n={self.n} arcs={self.arc_count}"]
        lines.extend(check.to_line(self.spec) for check in self.checks)
        return lines


def _measure(d, parameter):
    if parameter == "lambda":
        return arc_connectivity(d)
    if parameter == "alpha":
        return independence_number(d)[0]
    if parameter in ("delta0", "delta0_min"):
        return min_semidegree(d)
    if parameter == "strong":
        return is_strong(d)
    if parameter == "cobipartite":
        return co_bipartition(d) is not None
    raise FamilyError(f"no measurement for '{parameter}'")


def sanity(spec):
    """
    Compare the generated digraph's parameters with the family's declared ones.

    Returns:
        SanityReport: one check per declared parameter
    """
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    family, params = _resolve(spec)
    d = family.builder(**params)
    declared = family.declared_for(params)
    checks = tuple(SanityCheck(parameter, value, _measure(d, parameter)) for parameter, value in declared.items())
    report = SanityReport(spec, d.n, d.arc_count, checks)
    if not report.ok:
        logger.error(f"Family {spec} disagrees with its declared parameters: {report.to_lines()}")
    else:
        logger.info(f"Family {spec} matches {len(checks)} declared parameters")
    return report
