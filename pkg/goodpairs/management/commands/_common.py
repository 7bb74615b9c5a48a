"""
Argument and output helpers shared by the goodpairs management commands.
"""

from pathlib import Path

from django.conf import settings
from django.core.management.base import CommandError

from goodpairs.budget import Budget
from goodpairs.digraph import DigraphError, parse_text
from goodpairs.families import FamilyError, generate
from goodpairs.harness.reports import EXIT_USAGE, Status, exit_code


def add_budget_arguments(parser, jobs=True):
    parser.add_argument("--seed", type=int, default=1, help="Seed of sampled runs")
    parser.add_argument(
        "--budget-secs",
        type=float,
        default=None,
        help="Wall-clock budget in seconds (default: BRANCHPAIR_BUDGET_SECS)",
    )
    parser.add_argument(
        "--budget-instances",
        type=int,
        default=None,
        help="Instance cap of sampled runs (default: BRANCHPAIR_BUDGET_INSTANCES)",
    )
    if jobs:
        parser.add_argument(
            "--jobs",
            type=int,
            default=None,
            help="Worker processes (default: BRANCHPAIR_JOBS)",
        )


def add_input_arguments(parser):
    parser.add_argument("input", nargs="?", help="Path to a digraph in the text format")
    parser.add_argument("--family", type=str, default=None, help="Family spec instead of a file, e.g. 'WPrimeN:n=10'")


def budget_from(options):
    return Budget.from_settings(options.get("budget_secs"), options.get("budget_instances"))


def instances_from(options, budget):
    """Sample count: --count when given, else the budget's instance cap."""
    count = options.get("count")
    if count is None:
        count = budget.instances
    if count is None or count < 1:
        raise CommandError("instance count must be at least 1", returncode=EXIT_USAGE)
    return count


def jobs_from(options):
    jobs = options.get("jobs") or settings.BRANCHPAIR_JOBS
    if jobs < 1:
        raise CommandError("--jobs must be at least 1", returncode=EXIT_USAGE)
    return jobs


def usage_error(e):
    return CommandError(str(e), returncode=EXIT_USAGE)


def load_digraph(options):
    """
    Digraph named by the input file or --family.

    Raises:
        CommandError: With the usage exit code when neither or both are given,
            the file is missing or the digraph cannot be parsed or built
    """
    path, spec = options.get("input"), options.get("family")
    if bool(path) == bool(spec):
        raise CommandError("give either an input file or --family", returncode=EXIT_USAGE)
    try:
        if spec:
            return generate(spec)
        path = Path(path)
        if not path.exists():
            raise CommandError(f"File not found: {path}", returncode=EXIT_USAGE)
        return parse_text(path.read_bytes())
    except (DigraphError, FamilyError) as e:
        raise usage_error(e) from e


def resolve_vertex(d, name):
    if name is None:
        return None
    try:
        return d.vertex(name)
    except DigraphError as e:
        raise usage_error(e) from e


def write_lines(command, lines):
    """Write report lines, styling STATUS and CERT lines by outcome."""
    for line in lines:
        if line.startswith("STATUS"):
            if line.endswith(Status.CONFIRMED):
                line = command.style.SUCCESS(line)
            elif line.endswith(Status.REFUTED):
                line = command.style.ERROR(line)
            else:
                line = command.style.WARNING(line)
        elif line.startswith("CERT refuted") or line.startswith("CERT counterexample"):
            line = command.style.ERROR(line)
        command.stdout.write(line)


def finish(statuses, message):
    """
    Raise CommandError with the exit code of statuses unless all were confirmed.
    """
    code = exit_code(statuses)
    if code:
        raise CommandError(message, returncode=code)
