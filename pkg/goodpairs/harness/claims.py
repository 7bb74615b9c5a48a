"""
Registry of reproducible claims.

Each claim checker takes a ClaimContext and returns a ReproReport; a
refuted report carries the digraph and certificate that refute it.
"""

import logging
from dataclasses import dataclass, field
from itertools import product

from django.conf import settings

from goodpairs import tasks
from goodpairs.analysis import (
    arc_connectivity,
    co_bipartition,
    in_generators,
    independence_number,
    is_strong,
    min_semidegree,
)
from goodpairs.branchings import BudgetExceeded, CertificateKind, oracle_good_pair, validate_good_pair
from goodpairs.budget import Budget
from goodpairs.digraph import build, induced
from goodpairs.families import (
    FAMILIES,
    FamilySpec,
    bad_multi,
    h4_digraph,
    sanity,
    strong_not_enough,
    strong_not_enough_block,
    w_digraph,
    w_prime,
)
from goodpairs.figures import E4, F4, ST4
from goodpairs.harness.enumeration import EnumerationTask, Filters, Mode, generate
from goodpairs.harness.reports import (
    ReproReport,
    Status,
    UnknownClaim,
    counterexample_lines,
    stat_line,
    status_of,
)
from goodpairs.harness.sampling import sample
from goodpairs.solvers import (
    SolverError,
    alpha2_good_pair,
    is_e4,
    semicomplete_good_pair,
    semicomplete_good_r_pair,
    three_vertex_pair,
)

logger = logging.getLogger(__name__)


@dataclass
class ClaimContext:
    budget: Budget = field(default_factory=Budget)
    seed: int = 1
    instances: int | None = None
    exhaustive: bool = False
    jobs: int = 1


class Refuted(Exception):
    """Raised inside a checker with the transcript that refutes the claim."""

    def __init__(self, lines):
        self.lines = list(lines)
        super().__init__(self.lines[0] if self.lines else "refuted")


def _no_pair(d, what, root_in=None, root_out=None, budget=None):
    """Oracle certificate that d has no such pair; refutes when one is found."""
    cert = oracle_good_pair(d, root_in=root_in, root_out=root_out, budget=budget)
    if cert.found:
        raise Refuted([f"CERT {what} has a pair", *counterexample_lines(d, cert)])
    return cert


def _expect(condition, d, message, certificate=None):
    if not condition:
        raise Refuted([f"CERT {message}", *counterexample_lines(d, certificate)])


def _construct(d, what, solve, *args, **kwargs):
    """Run a construction; a solver error refutes the claim it is checked for."""
    try:
        return solve(d, *args, **kwargs)
    except SolverError as e:
        raise Refuted([f"CERT {what} failed: {e}", *counterexample_lines(d)]) from e


def _samples(ctx, setting):
    """Sample count of a claim: the context's when set, else the claim's own setting."""
    return ctx.instances if ctx.instances is not None else getattr(settings, setting)


def _from_summary(summary, listed):
    """Statistics and transcript lines of a harness summary."""
    statistics = {key: value for key, value in summary.items() if not isinstance(value, list)}
    return statistics, [line for lines in summary[listed] for line in lines]


# Checkers


def check_small4(ctx):
    """4 vertices, at least 6 arcs, δ⁰ >= 1: a good pair exists iff the digraph is not E4."""
    _no_pair(E4.host(), "E4", budget=ctx.budget)
    f4 = F4.host()
    _expect(oracle_good_pair(f4, budget=ctx.budget).found, f4, "F4 without a good pair")
    task = EnumerationTask(4, Filters(delta0_min=1, arcs_min=6), Mode.CANONICAL)
    classes = e4_classes = 0
    for d in generate(task):
        if not task.filters.accepts(d):
            continue
        classes += 1
        cert = oracle_good_pair(d, budget=ctx.budget)
        e4 = is_e4(d)
        e4_classes += e4
        _expect(cert.found != e4, d, f"good pair {cert.found} but E4 {e4}", cert)
    return {"classes": classes, "e4_classes": e4_classes}


def _semicomplete_four():
    pairs = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    for states in product(range(3), repeat=len(pairs)):
        arcs = []
        for (u, v), state in zip(pairs, states, strict=True):
            arcs.extend({0: [(u, v)], 1: [(v, u)], 2: [(u, v), (v, u)]}[state])
        yield build(4, arcs)


def check_nonexception_n4(ctx):
    """Every semicomplete digraph on 4 vertices and every in-generator r: construction agrees with the oracle."""
    stats = {"digraphs": 0, "roots": 0, "pairs": 0, "exceptions": 0, "four_exceptions": 0}
    for d in _semicomplete_four():
        stats["digraphs"] += 1
        for r in sorted(in_generators(d)):
            stats["roots"] += 1
            cert = _construct(d, f"semicomplete_good_r_pair at r={r}", semicomplete_good_r_pair, r)
            oracle = oracle_good_pair(d, root_in=r, budget=ctx.budget)
            _expect(cert.found == oracle.found, d, f"r={r} construction {cert.kind} oracle {oracle.kind}", oracle)
            if cert.found:
                _expect(bool(validate_good_pair(d, cert.pair, root_in=r)), d, f"r={r} invalid constructed pair")
                stats["pairs"] += 1
            elif cert.kind is CertificateKind.FOUR_EXCEPTION:
                stats["four_exceptions"] += 1
            else:
                stats["exceptions"] += 1
    st4 = ST4.host()
    _expect(semicomplete_good_r_pair(st4, 0).kind is CertificateKind.FOUR_EXCEPTION, st4, "(ST4, a) not a 4-exception")
    for r in (1, 2, 3):
        _expect(semicomplete_good_r_pair(st4, r).found, st4, f"(ST4, {st4.label(r)}) without a pair")
    return stats


def check_w(ctx):
    """W has no arc-disjoint B-_{c1}, B+_{c2}, yet alpha2_good_pair finds a good pair."""
    w = w_digraph()
    cert = _no_pair(w, "W at (c1, c2)", root_in=w.vertex("c1"), root_out=w.vertex("c2"), budget=ctx.budget)
    report = _construct(w, "alpha2_good_pair", alpha2_good_pair, budget=ctx.budget)
    _expect(bool(validate_good_pair(w, report.pair)), w, "alpha2_good_pair returned an invalid pair")
    return {"out_branchings": cert.statistics.out_branchings, "strategy": report.strategy, "stage": report.stage}


def check_h4(ctx):
    """H4: 10 vertices, 20 arcs, λ = 2, α = 4, E4 on every a_i a_{i+1} b_i b_{i+1}, no good pair."""
    h4 = h4_digraph()
    _expect(h4.n == 10 and h4.arc_count == 20, h4, "H4 size")
    _expect(arc_connectivity(h4) == 2, h4, "λ(H4) != 2")
    _expect(independence_number(h4)[0] == 4, h4, "α(H4) != 4")
    for i in range(1, 6):
        after = i % 5 + 1
        names = [f"a{i}", f"a{after}", f"b{i}", f"b{after}"]
        _expect(is_e4(induced(h4, [h4.vertex(name) for name in names])), h4, f"{names} does not induce E4")
    cert = _no_pair(h4, "H4", budget=ctx.budget)
    return {"out_branchings": cert.statistics.out_branchings, "elapsed": cert.statistics.elapsed}


def _enumeration_claim(task, ctx):
    summary = tasks.enumerate_digraphs(task, jobs=ctx.jobs, budget=ctx.budget)
    statistics, lines = _from_summary(summary, "counterexamples")
    return status_of(summary), statistics, lines


def check_small(ctx):
    """Every digraph of order at most 5 with δ⁰ >= 2 has a good pair."""
    statuses, statistics, lines = [], {}, []
    for n in range(3, 6):
        status, stats, found = _enumeration_claim(EnumerationTask(n, Filters(delta0_min=2)), ctx)
        statuses.append(status)
        statistics[f"n{n}_qualifying"] = stats["qualifying"]
        statistics[f"n{n}_failures"] = stats["failures"]
        lines.extend(found)
    return _worst(statuses), statistics, lines


def check_n6(ctx):
    """Every digraph on 6 vertices with λ >= 2 has a good pair (canonical with --exhaustive, else sampled)."""
    if ctx.exhaustive:
        task = EnumerationTask(6, Filters(lambda_min=2), Mode.CANONICAL)
    else:
        count = _samples(ctx, "BRANCHPAIR_N6_SAMPLES")
        task = EnumerationTask(6, Filters(lambda_min=2), Mode.SAMPLED, count=count, seed=ctx.seed)
    return _enumeration_claim(task, ctx)


def check_main_alpha2(ctx):
    """alpha2_good_pair on random digraphs with α <= 2 <= λ, 7 <= n <= 12, oracle-checked up to the cap."""
    count = _samples(ctx, "BRANCHPAIR_MAINX_SAMPLES")
    summary = tasks.cross_validate_sharded("alpha2_good_pair", count, ctx.seed, (7, 12), ctx.jobs, ctx.budget)
    statistics, lines = _from_summary(summary, "mismatches")
    return status_of(summary), statistics, lines


def check_cobipartite(ctx):
    """cobipartite_good_pair on random 2-arc-strong co-bipartite digraphs, 6 <= n <= 10."""
    count = _samples(ctx, "BRANCHPAIR_COBIPARTITE_SAMPLES")
    summary = tasks.cross_validate_sharded("cobipartite_good_pair", count, ctx.seed, (6, 10), ctx.jobs, ctx.budget)
    statistics, lines = _from_summary(summary, "mismatches")
    return status_of(summary), statistics, lines


SANITY_SPECS = (
    *(FamilySpec(name) for name in FAMILIES),
    FamilySpec("WPrimeN", (("n", 9),)),
    FamilySpec("WS", (("m", 1),)),
    FamilySpec("StrongNotEnough", (("k", 2),)),
)


def check_family_sanity(ctx):
    """Generated families have their declared λ, α and δ⁰."""
    checked = 0
    for spec in SANITY_SPECS:
        if ctx.budget.expired():
            return Status.BUDGET_EXCEEDED, {"families": checked}, []
        report = sanity(spec)
        checked += len(report.checks)
        if not report.ok:
            raise Refuted([f"CERT family {spec} disagrees with its declared parameters", *report.to_lines()])
    return {"families": len(SANITY_SPECS), "checks": checked}


def check_badmulti(ctx):
    """The multidigraph has no arc-disjoint B+_s, B-_s."""
    d = bad_multi()
    s = d.vertex("s")
    _expect(arc_connectivity(d) == 2, d, "λ != 2")
    cert = _no_pair(d, "BadMulti at (s, s)", root_in=s, root_out=s, budget=ctx.budget)
    return {"out_branchings": cert.statistics.out_branchings}


def check_n3(ctx):
    """Every digraph on 3 vertices with at least 4 arcs has a good pair, built by the path split."""
    task = EnumerationTask(3, Filters(arcs_min=4))
    count = 0
    for d in generate(task):
        if not task.filters.accepts(d):
            continue
        count += 1
        pair = _construct(d, "three_vertex_pair", three_vertex_pair)
        _expect(bool(validate_good_pair(d, pair)), d, "path split produced an invalid pair")
        _expect(oracle_good_pair(d, budget=ctx.budget).found, d, "oracle finds no pair")
    return {"digraphs": count}


def check_infalpha3(ctx):
    """W'_10 is 2-arc-strong with α = 3, with no arc-disjoint B+_s, B-_t for s, t in S."""
    d = w_prime(10)
    _expect(arc_connectivity(d) == 2, d, "λ(W'_10) != 2")
    _expect(independence_number(d)[0] == 3, d, "α(W'_10) != 3")
    s_vertices = [d.vertex(name) for name in ("s0", "s1")]
    branchings = 0
    for s in s_vertices:
        for t in s_vertices:
            cert = _no_pair(d, f"W'_10 at B+_{d.label(s)}, B-_{d.label(t)}", root_in=t, root_out=s, budget=ctx.budget)
            branchings += cert.statistics.out_branchings
    return {"root_choices": len(s_vertices) ** 2, "out_branchings": branchings}


def check_strong_not_enough(ctx):
    """The block has no good (v, v)-pair; two blocks joined by a 2-cycle are strong, co-bipartite, δ⁰ >= k."""
    block = strong_not_enough_block(1)
    v = block.vertex("v")
    cert = _no_pair(block, "block at (v, v)", root_in=v, root_out=v, budget=ctx.budget)
    for k in (1, 2):
        d = strong_not_enough(k)
        _expect(is_strong(d), d, f"k={k} not strong")
        _expect(co_bipartition(d) is not None, d, f"k={k} not co-bipartite")
        _expect(min_semidegree(d) >= k, d, f"k={k} semidegree below k")
    return {"out_branchings": cert.statistics.out_branchings}


def check_semicomplete(ctx):
    """Every semicomplete digraph of order at least 4 has a good pair (sampled, 4 <= n <= 8)."""
    count = 0
    samples = _samples(ctx, "BRANCHPAIR_BUDGET_INSTANCES")
    for item in sample("semicomplete", (4, 8), ctx.seed, samples, budget=ctx.budget):
        count += 1
        d = item.digraph
        pair = _construct(d, "semicomplete_good_pair", semicomplete_good_pair)
        _expect(bool(validate_good_pair(d, pair)), d, "semicomplete_good_pair returned an invalid pair")
    if ctx.budget.expired():
        return Status.BUDGET_EXCEEDED, {"instances": count}, []
    return {"instances": count}


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    check: object
    slow: bool = False


CLAIMS = {
    claim.id: claim
    for claim in (
        Claim("prop-small4-E4", "order 4, >= 6 arcs, δ⁰ >= 1: good pair iff not E4", check_small4),
        Claim("thm-nonexception-n4", "semicomplete order 4: exceptions are exactly the r without good r-pair",
              check_nonexception_n4),
        Claim("prop-W", "W has no B-_{c1}, B+_{c2} pair but has a good pair", check_w),
        Claim("prop-H4", "H4 is 2-arc-strong with α = 4 and no good pair", check_h4),
        Claim("prop-small", "δ⁰ >= 2 and order <= 5: good pair", check_small, slow=True),
        Claim("prop-n6ok", "order 6 and λ >= 2: good pair", check_n6),
        Claim("thm-mainX", "α <= 2 <= λ: good pair, constructed", check_main_alpha2),
        Claim("thm-cobipartite", "co-bipartite and λ >= 2: good pair, constructed", check_cobipartite),
        Claim("family-sanity", "families have their declared parameters", check_family_sanity),
        Claim("fig-badmulti", "2-arc-strong multidigraph with α = 2 and no B+_s, B-_s pair", check_badmulti),
        Claim("prop-n3", "3 vertices and >= 4 arcs: good pair", check_n3),
        Claim("prop-infalpha3", "W'_10: λ = 2, α = 3, no B+_s, B-_t for s, t in S", check_infalpha3),
        Claim("prop-strongnotenough", "large semidegree does not force a good pair", check_strong_not_enough),
        Claim("cor-semicomplete", "semicomplete of order >= 4: good pair", check_semicomplete),
    )
}  # fmt: skip


def _worst(statuses):
    for status in (Status.REFUTED, Status.BUDGET_EXCEEDED):
        if status in statuses:
            return status
    return Status.CONFIRMED


def get_claims(ids=None, include_slow=False):
    """Claims by id in the order given; all fast claims (plus slow ones on request) when ids is empty."""
    if not ids:
        return [claim for claim in CLAIMS.values() if include_slow or not claim.slow]
    unknown = [claim_id for claim_id in ids if claim_id not in CLAIMS]
    if unknown:
        raise UnknownClaim(f"unknown claim(s) {', '.join(unknown)}; choose from {', '.join(CLAIMS)}")
    return [CLAIMS[claim_id] for claim_id in ids]


def run_claim(claim, ctx):
    """
    Run one claim's checker.

    Returns:
        ReproReport
    """
    logger.info(f"Checking claim {claim.id}")
    try:
        outcome = claim.check(ctx)
    except Refuted as e:
        logger.error(f"Claim {claim.id} refuted: {e}")
        return ReproReport(claim.id, Status.REFUTED, claim.description, certificates=e.lines)
    except BudgetExceeded as e:
        logger.warning(f"Claim {claim.id} ran out of budget: {e}")
        return ReproReport(claim.id, Status.BUDGET_EXCEEDED, claim.description, {"elapsed": ctx.budget.elapsed()})

    if isinstance(outcome, dict):
        status, statistics, lines = Status.CONFIRMED, outcome, []
    else:
        status, statistics, lines = outcome
    if status is Status.REFUTED and not lines:
        lines = [stat_line(statistics)]
    return ReproReport(claim.id, status, claim.description, statistics, lines)
