"""
Management command to emit a named digraph family.
"""

from django.core.management.base import BaseCommand, CommandError

from goodpairs.digraph import emit_dot, emit_text
from goodpairs.families import FAMILIES, FamilyError, generate, sanity
from goodpairs.harness import EXIT_REFUTED

from ._common import usage_error, write_lines


class Command(BaseCommand):
    """Print a family member in the text or DOT format, or check its declared parameters."""

    help = "Emit a named family digraph, e.g. 'W', 'H4' or 'WPrimeN:n=10'"

    def add_arguments(self, parser):
        parser.add_argument("spec", nargs="?", help="Family name with optional parameters")
        parser.add_argument("--format", choices=("text", "dot"), default="text")
        parser.add_argument(
            "--sanity",
            action="store_true",
            help="Compare λ, α and δ⁰ of the digraph with the family's declared values",
        )
        parser.add_argument("--list", action="store_true", help="List the families and their defaults")

    def handle(self, **options):
        if options["list"]:
            for family in FAMILIES.values():
                defaults = ",".join(f"{key}={value}" for key, value in family.defaults.items())
                self.stdout.write(f"{family.name}{':' + defaults if defaults else ''}  {family.description}")
            return
        if not options["spec"]:
            raise usage_error("a family spec is required (see --list)")

        try:
            if options["sanity"]:
                report = sanity(options["spec"])
            else:
                d = generate(options["spec"])
        except FamilyError as e:
            raise usage_error(e) from e

        if options["sanity"]:
            write_lines(self, report.to_lines())
            if not report.ok:
                raise CommandError(f"{report.spec} disagrees with its declared parameters", returncode=EXIT_REFUTED)
            self.stdout.write(self.style.SUCCESS(f"{report.spec}: all declared parameters match"))
            return

        text = emit_dot(d) if options["format"] == "dot" else emit_text(d)
        self.stdout.write(text, ending="")
