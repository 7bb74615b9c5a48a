"""
Management command to enumerate small digraphs and test them with the oracle.
"""

from django.core.management.base import BaseCommand

from goodpairs import tasks
from goodpairs.harness import EnumerationTask, Filters, HarnessError, Mode, Predicate, stat_line, status_of
from goodpairs.harness.enumeration import CANONICAL_MAX_VERTICES, EXHAUSTIVE_MAX_VERTICES

from ._common import (
    add_budget_arguments,
    budget_from,
    finish,
    instances_from,
    jobs_from,
    usage_error,
    write_lines,
)


def default_mode(n):
    if n <= EXHAUSTIVE_MAX_VERTICES:
        return Mode.EXHAUSTIVE
    if n <= CANONICAL_MAX_VERTICES:
        return Mode.CANONICAL
    return Mode.SAMPLED


class Command(BaseCommand):
    """Enumerate digraphs of one order, filter them and check a good-pair predicate."""

    help = "Enumerate digraphs of order n meeting the filters and check that each has a good pair"

    def add_arguments(self, parser):
        parser.add_argument("n", type=int, help="Number of vertices")
        parser.add_argument(
            "--mode",
            choices=[mode.value for mode in Mode],
            default=None,
            help="exhaustive (n <= 5), canonical (n <= 6) or sampled; chosen from n by default",
        )
        parser.add_argument(
            "--exhaustive",
            action="store_true",
            help="Shorthand for the widest complete mode allowed at this order",
        )
        parser.add_argument(
            "--predicate",
            choices=[predicate.value for predicate in Predicate],
            default=Predicate.HAS_GOOD_PAIR.value,
        )
        parser.add_argument("--lambda-min", type=int, default=None, help="Keep digraphs with λ at least this")
        parser.add_argument("--delta0-min", type=int, default=None, help="Keep digraphs with δ⁰ at least this")
        parser.add_argument("--alpha-max", type=int, default=None, help="Keep digraphs with α at most this")
        parser.add_argument("--alpha-eq", type=int, default=None, help="Keep digraphs with α exactly this")
        parser.add_argument("--arcs-min", type=int, default=None, help="Keep digraphs with at least this many arcs")
        parser.add_argument("--count", type=int, default=None, help="Samples in sampled mode")
        parser.add_argument(
            "--stop-on-failure",
            action="store_true",
            help="Stop each shard at its first counterexample",
        )
        add_budget_arguments(parser)

    def handle(self, **options):
        n = options["n"]
        if options["mode"]:
            mode = Mode(options["mode"])
        elif options["exhaustive"]:
            mode = Mode.EXHAUSTIVE if n <= EXHAUSTIVE_MAX_VERTICES else Mode.CANONICAL
        else:
            mode = default_mode(n)

        budget = budget_from(options)
        filters = Filters(
            lambda_min=options["lambda_min"],
            delta0_min=options["delta0_min"],
            alpha_max=options["alpha_max"],
            alpha_eq=options["alpha_eq"],
            arcs_min=options["arcs_min"],
        )
        count = instances_from(options, budget) if mode is Mode.SAMPLED else 0
        task = EnumerationTask(n, filters, mode, Predicate(options["predicate"]), count, options["seed"])
        try:
            task.validate()
        except HarnessError as e:
            raise usage_error(e) from e

        summary = tasks.enumerate_digraphs(
            task,
            jobs=jobs_from(options),
            budget=budget,
            stop_on_failure=options["stop_on_failure"],
        )
        for lines in summary["counterexamples"]:
            write_lines(self, lines)
        statistics = {key: value for key, value in summary.items() if key != "counterexamples"}
        status = status_of(summary)
        write_lines(self, [stat_line(statistics, seed=options["seed"]), f"STATUS enumerate {status}"])
        finish([status], f"{summary['failures']} counterexamples" if summary["failures"] else "budget exceeded")
