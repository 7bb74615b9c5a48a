"""
Management command to cross-validate a constructive solver against the oracle.
"""

from django.core.management.base import BaseCommand

from goodpairs import tasks
from goodpairs.harness import OPERATIONS, HarnessError, stat_line, status_of
from goodpairs.harness.crossval import get_operation

from ._common import (
    add_budget_arguments,
    budget_from,
    finish,
    instances_from,
    jobs_from,
    usage_error,
    write_lines,
)


class Command(BaseCommand):
    """Compare a solver with the oracle on seeded random instances."""

    help = "Run a constructive solver on random instances and compare existence and validity with the oracle"

    def add_arguments(self, parser):
        parser.add_argument("operation", type=str, help=f"One of: {', '.join(OPERATIONS)}")
        parser.add_argument("--count", type=int, default=None, help="Number of instances")
        parser.add_argument("--n-min", type=int, default=None, help="Smallest order (default: per operation)")
        parser.add_argument("--n-max", type=int, default=None, help="Largest order (default: per operation)")
        add_budget_arguments(parser)

    def handle(self, **options):
        try:
            operation = get_operation(options["operation"])
        except HarnessError as e:
            raise usage_error(e) from e

        low, high = operation.n_range
        low = options["n_min"] if options["n_min"] is not None else low
        high = options["n_max"] if options["n_max"] is not None else high
        if not 1 <= low <= high:
            raise usage_error(f"invalid order range {low}..{high}")

        budget = budget_from(options)
        summary = tasks.cross_validate_sharded(
            operation.name,
            instances_from(options, budget),
            options["seed"],
            (low, high),
            jobs=jobs_from(options),
            budget=budget,
        )
        for lines in summary["mismatches"]:
            write_lines(self, lines)
        statistics = {key: value for key, value in summary.items() if key != "mismatches"}
        status = status_of(summary)
        write_lines(self, [stat_line(statistics), f"STATUS {operation.name} {status}"])
        finish([status], f"{summary['failures']} mismatches" if summary["failures"] else "budget exceeded")
