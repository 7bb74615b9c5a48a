"""
Good pairs of semicomplete digraphs.

The non-strong case is built directly from a Hamiltonian cycle of the
out-generator set; the strong case grows a good r-pair of a 4-vertex
subdigraph around a 3-cycle through r, one absorbed vertex at a time.
"""

import logging

from goodpairs.analysis import (
    hamiltonian_cycle_through,
    in_generators,
    is_semicomplete,
    is_strong,
    out_generators,
)
from goodpairs.branchings import (
    Certificate,
    CertificateKind,
    GoodPair,
    is_4_exception,
    is_exception,
    oracle_good_pair,
)
from goodpairs.digraph import induced, remove_arc, reverse
from goodpairs.figures import FOUR_VERTEX_R_PAIRS
from goodpairs.solvers.base import (
    PreconditionViolated,
    SoundnessError,
    checked,
    embed_figure_pair,
    in_tree,
    lift,
    pair_vertices,
)

logger = logging.getLogger(__name__)


def _require_semicomplete(d, minimum=4):
    if not is_semicomplete(d):
        raise PreconditionViolated("digraph is not semicomplete")
    if d.n < minimum:
        raise PreconditionViolated(f"need at least {minimum} vertices, got {d.n}")


def semicomplete_nonstrong_pair(d, r, q):
    """
    Good (r, q)-pair of a non-strong semicomplete digraph.

    Args:
        d: Non-strong semicomplete digraph on at least 4 vertices
        r: Root of the in-branching, in In(d)
        q: Root of the out-branching, in Out(d)

    Returns:
        GoodPair: validated, with in-root r and out-root q

    Raises:
        PreconditionViolated: If d or the roots do not qualify
    """
    _require_semicomplete(d)
    if is_strong(d):
        raise PreconditionViolated("digraph is strong")
    outs = out_generators(d)
    ins = in_generators(d)
    if r not in ins:
        raise PreconditionViolated(f"vertex {r} is not an in-generator")
    if q not in outs:
        raise PreconditionViolated(f"vertex {q} is not an out-generator")

    if len(outs) >= 2:
        w1 = induced(d, outs)
        cycle = hamiltonian_cycle_through(w1, w1.back_map.index(q))
        u = [w1.back_map[v] for v in cycle[:-1]]
        rest = set(d.vertices) - outs
        tree, reached = in_tree(d, [r], rest)
        if reached != rest:
            raise SoundnessError("in-generator does not collect the non-generator part")
        in_arcs = [*tree, (u[-1], u[0]), *((ui, r) for ui in u[:-1])]
        out_arcs = [*zip(u, u[1:]), *((u[-1], z) for z in sorted(rest))]
        pair = GoodPair.of(r, in_arcs, q, out_arcs)
    elif len(ins) >= 2:
        pair = semicomplete_nonstrong_pair(reverse(d), q, r).reversed()
    else:
        u, v = next((t, h) for t, h in d.pairs() if t not in (q, r) and h not in (q, r))
        others = [z for z in d.vertices if z not in (r, q, u, v)]
        in_arcs = [(q, v), (v, r), (u, r), *((z, r) for z in others)]
        out_arcs = [(q, u), (u, v), (q, r), *((q, z) for z in others)]
        pair = GoodPair.of(r, in_arcs, q, out_arcs)
    return checked(d, pair, "non-strong semicomplete construction", root_in=r, root_out=q)


def semicomplete_util_extend(d, r, sub_pair):
    """
    Extend a good r-pair of a subdigraph to all of d.

    Outside vertices are absorbed lowest first: one dominating the whole
    current set sends an arc into it for the in-branching and becomes the
    new out-root; any other one has an out-neighbour z1 and an
    in-neighbour z2 inside, giving arcs yz1 and z2y.

    Args:
        d: Semicomplete digraph
        r: In-root of sub_pair, in In(d)
        sub_pair: Good r-pair of an induced subdigraph on at least 2 vertices,
            in d's vertex indices

    Raises:
        PreconditionViolated: If d is not semicomplete or no vertex can be absorbed
    """
    _require_semicomplete(d, minimum=2)
    if sub_pair.in_root != r:
        raise PreconditionViolated(f"sub-pair is rooted at {sub_pair.in_root}, not {r}")
    inside = pair_vertices(sub_pair)
    if len(inside) < 2:
        raise PreconditionViolated("sub-pair must span at least 2 vertices")

    in_arcs = list(sub_pair.in_branching.arcs)
    out_arcs = list(sub_pair.out_branching.arcs)
    out_root = sub_pair.out_root
    while len(inside) < d.n:
        y = next(
            (y for y in d.vertices if y not in inside and any(d.has_arc(y, v) for v in inside)),
            None,
        )
        if y is None:
            raise PreconditionViolated(f"vertex {r} is not an in-generator")
        if all(d.has_arc(y, v) for v in inside):
            v = min(inside - {out_root})
            in_arcs.append((y, v))
            out_arcs.append((y, out_root))
            out_root = y
        else:
            z1 = min(v for v in inside if d.has_arc(y, v))
            z2 = min(v for v in inside if d.has_arc(v, y))
            in_arcs.append((y, z1))
            out_arcs.append((z2, y))
        inside.add(y)
    return checked(d, GoodPair.of(r, in_arcs, out_root, out_arcs), "semicomplete extension", root_in=r)


def four_vertex_r_pair(d, r):
    """
    Good r-pair of a 4-vertex semicomplete digraph that is not a 4-exception at r.

    A non-strong digraph uses the direct construction, otherwise the drawn
    pairs are matched with their in-root on r, with the oracle behind them.
    """
    if not is_strong(d):
        return semicomplete_nonstrong_pair(d, r, min(out_generators(d)))
    for figure in FOUR_VERTEX_R_PAIRS:
        pair = embed_figure_pair(d, figure, fixed={figure.in_root: r})
        if pair is not None:
            logger.debug(f"4-vertex r-pair from table {figure.name}")
            return checked(d, pair, f"table {figure.name}", root_in=r)
    cert = oracle_good_pair(d, root_in=r)
    if not cert.found:
        raise SoundnessError(f"no good {r}-pair on a 4-vertex semicomplete digraph that is not a 4-exception")
    return cert.pair


def semicomplete_good_r_pair(d, r):
    """
    Good r-pair of a semicomplete digraph, or the exception certificate.

    Returns:
        Certificate: PAIR_FOUND, or EXCEPTION / FOUR_EXCEPTION with witness (r, y, z)

    Raises:
        PreconditionViolated: If d is not semicomplete, too small, or r is not in In(d)
    """
    _require_semicomplete(d)
    if r not in in_generators(d):
        raise PreconditionViolated(f"vertex {r} is not an in-generator")

    witness = is_exception(d, r)
    if witness is not None:
        y, z = witness
        kind = CertificateKind.FOUR_EXCEPTION if d.n == 4 and is_4_exception(d, r) else CertificateKind.EXCEPTION
        logger.debug(f"({d!r}, {r}) is an exception: y={y} z={z}")
        return Certificate(kind, root_in=r, witness=(r, y, z), route="exception")

    if not is_strong(d):
        pair = semicomplete_nonstrong_pair(d, r, min(out_generators(d)))
        return Certificate(CertificateKind.PAIR_FOUND, root_in=r, pair=pair, route="non-strong")

    _, z, y, _ = hamiltonian_cycle_through(d, r, 3)
    for t in d.vertices:
        if t in (r, y, z):
            continue
        sub = induced(d, {r, y, z, t})
        sub_r = sub.back_map.index(r)
        if sub_r in in_generators(sub) and not is_4_exception(sub, sub_r):
            sub_pair = lift(four_vertex_r_pair(sub, sub_r), sub)
            pair = semicomplete_util_extend(d, r, sub_pair)
            return Certificate(CertificateKind.PAIR_FOUND, root_in=r, pair=pair, route=f"extend-from-{t}")

    if d.has_arc(r, y):
        rest = remove_arc(d, y, r)
        pair = semicomplete_nonstrong_pair(rest, r, min(out_generators(rest)))
        pair = checked(d, pair, "arc-removal endgame", root_in=r)
        return Certificate(CertificateKind.PAIR_FOUND, root_in=r, pair=pair, route="drop-yr")

    raise SoundnessError(f"({d!r}, {r}) is neither an exception nor solvable")


def semicomplete_good_pair(d):
    """
    Good pair of a semicomplete digraph on at least 4 vertices.

    Raises:
        PreconditionViolated: If d is not semicomplete or has fewer than 4 vertices
    """
    _require_semicomplete(d)
    if not is_strong(d):
        return semicomplete_nonstrong_pair(d, min(in_generators(d)), min(out_generators(d)))
    r = next(v for v in d.vertices if len(d.in_adj[v]) >= 2)
    cert = semicomplete_good_r_pair(d, r)
    if not cert.found:
        raise SoundnessError(f"vertex {r} has two in-neighbours yet no good pair was built")
    return cert.pair
