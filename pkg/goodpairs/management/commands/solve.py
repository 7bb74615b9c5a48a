"""
Management command to find a good pair of one digraph, or certify there is none.
"""

import logging

from django.core.management.base import BaseCommand, CommandError

from goodpairs.analysis import AnalysisError, arc_connectivity, co_bipartition, independence_number, is_semicomplete
from goodpairs.branchings import BudgetExceeded, Certificate, CertificateKind, oracle_good_pair
from goodpairs.digraph import emit_dot
from goodpairs.harness import EXIT_BUDGET, EXIT_REFUTED
from goodpairs.solvers import (
    PreconditionViolated,
    SoundnessError,
    alpha2_good_pair,
    cobipartite_report,
    semicomplete_good_pair,
    semicomplete_good_r_pair,
    small_good_pair,
)
from goodpairs.solvers.small import SMALL_MAX_VERTICES

from ._common import add_input_arguments, budget_from, load_digraph, resolve_vertex, usage_error, write_lines

logger = logging.getLogger(__name__)

STRATEGIES = ("auto", "oracle", "small", "semicomplete", "cobipartite", "alpha2")


def _semicomplete(d, root_in):
    if root_in is not None:
        return semicomplete_good_r_pair(d, root_in)
    return Certificate(CertificateKind.PAIR_FOUND, pair=semicomplete_good_pair(d), route="semicomplete")


def choose_strategy(d, root_in, root_out):
    """Cheapest solver whose preconditions d meets; the oracle otherwise."""
    if root_out is not None:
        return "oracle"
    if d.n >= 4 and is_semicomplete(d):
        return "semicomplete"
    if root_in is not None:
        return "oracle"
    if d.n <= SMALL_MAX_VERTICES:
        return "small"
    if d.is_multi or arc_connectivity(d) < 2:
        return "oracle"
    if independence_number(d)[0] <= 2:
        return "alpha2"
    if co_bipartition(d) is not None:
        return "cobipartite"
    return "oracle"


def solve(d, strategy, root_in=None, root_out=None, budget=None):
    """
    Run one strategy on d.

    Returns:
        Certificate or SolveReport

    Raises:
        PreconditionViolated: If d or the roots do not suit the strategy
        SoundnessError: If a constructed pair fails its self-check
        BudgetExceeded: If the oracle runs out of budget
    """
    if strategy == "auto":
        strategy = choose_strategy(d, root_in, root_out)
        logger.info(f"Solving {d!r} with {strategy}")
    if strategy != "oracle" and root_out is not None:
        raise PreconditionViolated(f"strategy {strategy} does not take an out-root")
    if strategy not in ("oracle", "semicomplete") and root_in is not None:
        raise PreconditionViolated(f"strategy {strategy} does not take an in-root")

    if strategy == "oracle":
        return oracle_good_pair(d, root_in=root_in, root_out=root_out, budget=budget)
    if strategy == "small":
        return small_good_pair(d)
    if strategy == "semicomplete":
        return _semicomplete(d, root_in)
    if strategy == "cobipartite":
        return cobipartite_report(d)
    return alpha2_good_pair(d, budget=budget)


class Command(BaseCommand):
    """Print a good pair (or a certificate of non-existence) for one digraph."""

    help = "Find a good pair of a digraph with a chosen solver, or certify that none exists"

    def add_arguments(self, parser):
        add_input_arguments(parser)
        parser.add_argument("--root-in", type=str, default=None, help="Root of the in-branching (label or index)")
        parser.add_argument("--root-out", type=str, default=None, help="Root of the out-branching (label or index)")
        parser.add_argument("--strategy", choices=STRATEGIES, default="auto")
        parser.add_argument("--format", choices=("text", "dot"), default="text")
        parser.add_argument("--budget-secs", type=float, default=None, help="Oracle wall-clock budget")

    def handle(self, **options):
        d = load_digraph(options)
        root_in = resolve_vertex(d, options["root_in"])
        root_out = resolve_vertex(d, options["root_out"])
        budget = budget_from(options)

        try:
            result = solve(d, options["strategy"], root_in, root_out, budget)
        except (PreconditionViolated, AnalysisError) as e:
            raise usage_error(e) from e
        except SoundnessError as e:
            write_lines(self, [f"CERT refuted {e}"])
            raise CommandError(str(e), returncode=EXIT_REFUTED) from e
        except BudgetExceeded as e:
            self.stdout.write(self.style.WARNING(f"STAT {e.statistics.summary()}"))
            raise CommandError(str(e), returncode=EXIT_BUDGET) from e

        if options["format"] == "dot":
            self.stdout.write(emit_dot(d, highlight=result.pair), ending="")
            return
        write_lines(self, result.to_transcript(d))
        if result.pair is None:
            self.stdout.write(self.style.WARNING("no pair"))
        else:
            self.stdout.write(self.style.SUCCESS("pair found"))
