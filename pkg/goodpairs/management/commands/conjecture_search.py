"""
Management command to search for counterexamples to the open rooted conjectures.
"""

from django.core.management.base import BaseCommand

from goodpairs import tasks
from goodpairs.branchings import BudgetExceeded
from goodpairs.harness import Conjecture, HarnessError, Status, check_instance, stat_line, status_of
from goodpairs.harness.conjectures import parse_conjecture
from goodpairs.harness.reports import counterexample_lines

from ._common import (
    add_budget_arguments,
    add_input_arguments,
    budget_from,
    finish,
    instances_from,
    jobs_from,
    load_digraph,
    usage_error,
    write_lines,
)


class Command(BaseCommand):
    """Sample digraphs meeting a conjecture's hypothesis, or test one given digraph."""

    help = "Search for counterexamples to a rooted good-pair conjecture"

    def add_arguments(self, parser):
        parser.add_argument("conjecture", type=str, help=f"One of: {', '.join(Conjecture)}")
        add_input_arguments(parser)
        parser.add_argument("--count", type=int, default=None, help="Instances to sample")
        parser.add_argument("--n-min", type=int, default=5, help="Smallest sampled order")
        parser.add_argument("--n-max", type=int, default=9, help="Largest sampled order")
        add_budget_arguments(parser)

    def handle(self, **options):
        try:
            conjecture = parse_conjecture(options["conjecture"])
        except HarnessError as e:
            raise usage_error(e) from e

        if options["input"] or options["family"]:
            self.check_one(conjecture, options)
            return

        if not 2 <= options["n_min"] <= options["n_max"]:
            raise usage_error(f"invalid order range {options['n_min']}..{options['n_max']}")
        budget = budget_from(options)
        summary = tasks.search_sharded(
            str(conjecture),
            instances_from(options, budget),
            options["seed"],
            (options["n_min"], options["n_max"]),
            jobs=jobs_from(options),
            budget=budget,
        )
        for lines in summary["counterexamples"]:
            write_lines(self, lines)
        statistics = {key: value for key, value in summary.items() if key != "counterexamples"}
        status = status_of(summary)
        write_lines(self, [stat_line(statistics), f"STATUS {conjecture} {status}"])
        finish([status], f"{summary['failures']} counterexamples" if summary["failures"] else "budget exceeded")

    def check_one(self, conjecture, options):
        """
        Test every required root choice on one digraph.

        Failures refute the conjecture only when the digraph meets its
        hypothesis; otherwise they are reported as outside the hypothesis.
        """
        d = load_digraph(options)
        budget = budget_from(options)
        try:
            result = check_instance(conjecture, d, budget)
        except BudgetExceeded as e:
            self.stdout.write(self.style.WARNING(f"Oracle budget exceeded: {e}"))
            finish([Status.BUDGET_EXCEEDED], "budget exceeded")
            return

        for s, t, cert in result.failures:
            self.stdout.write(f"CERT failing s={d.label(s)} t={d.label(t)}")
            write_lines(self, cert.to_transcript(d))

        refuted = result.hypothesis and not result.satisfied
        statistics = {
            "conjecture": str(conjecture),
            "n": d.n,
            "arcs": d.arc_count,
            "hypothesis": result.hypothesis,
            "root_choices": result.checked,
            "failures": len(result.failures),
        }
        self.stdout.write(stat_line(statistics))
        if refuted:
            write_lines(self, [f"CERT refuted-conjecture={conjecture}", *counterexample_lines(d)])
            status = Status.REFUTED
        else:
            if result.failures:
                self.stdout.write(self.style.WARNING(f"Failures lie outside the hypothesis of {conjecture}"))
            status = Status.CONFIRMED
        write_lines(self, [f"STATUS {conjecture} {status}"])
        finish([status], f"counterexample to {conjecture}")
