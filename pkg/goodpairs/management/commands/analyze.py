"""
Management command to print the structural parameters of a digraph.
"""

from django.core.management.base import BaseCommand

from goodpairs.analysis import (
    INDEPENDENCE_MAX_VERTICES,
    arc_connectivity,
    co_bipartition,
    in_generators,
    independence_number,
    is_semicomplete,
    min_semidegree,
    out_generators,
    strong_components,
)
from goodpairs.harness import stat_line

from ._common import add_input_arguments, load_digraph


def _names(d, vertices):
    return ",".join(d.label(v) for v in sorted(vertices)) or "-"


class Command(BaseCommand):
    """Print λ, α, δ⁰, the strong components and the generator sets of a digraph."""

    help = "Print λ, α, δ⁰ and the strong components of a digraph"

    def add_arguments(self, parser):
        add_input_arguments(parser)

    def handle(self, **options):
        d = load_digraph(options)
        scc = strong_components(d)
        values = {
            "n": d.n,
            "arcs": d.arc_count,
            "multi": d.is_multi,
            "lambda": arc_connectivity(d) if d.n >= 2 else 0,
            "delta0": min_semidegree(d),
            "strong": scc.is_strong,
            "components": scc.count,
            "semicomplete": is_semicomplete(d),
            "cobipartite": co_bipartition(d) is not None,
        }
        alpha_witness = None
        if d.n <= INDEPENDENCE_MAX_VERTICES:
            values["alpha"], alpha_witness = independence_number(d)
        self.stdout.write(stat_line(values))

        if alpha_witness is not None:
            self.stdout.write(f"STAT independent_set={_names(d, alpha_witness)}")
        for i, members in enumerate(scc.components):
            kinds = [kind for kind, ends in (("initial", scc.initial), ("terminal", scc.terminal)) if i in ends]
            self.stdout.write(f"STAT component={i} vertices={_names(d, members)} ends={','.join(kinds) or '-'}")
        self.stdout.write(f"STAT in_generators={_names(d, in_generators(d))}")
        self.stdout.write(f"STAT out_generators={_names(d, out_generators(d))}")
