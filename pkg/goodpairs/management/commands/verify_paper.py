"""
Management command to reproduce the registered good-pair claims.
"""

from pathlib import Path

from django.core.management.base import BaseCommand

from goodpairs.harness import ClaimContext, HarnessError, get_claims, run_claim, stat_line

from ._common import add_budget_arguments, budget_from, finish, jobs_from, usage_error, write_lines


class Command(BaseCommand):
    """Run claim checkers and print one CLAIM/STATUS/STAT block per claim."""

    help = "Reproduce the registered claims; exits 2 if any is refuted, 3 if a budget ran out"

    def add_arguments(self, parser):
        parser.add_argument(
            "--claims",
            type=str,
            default="",
            help="Comma-separated claim ids (default: every fast claim)",
        )
        parser.add_argument(
            "--slow",
            action="store_true",
            help="Include slow claims when no ids are given",
        )
        parser.add_argument(
            "--exhaustive",
            action="store_true",
            help="Use canonical enumeration instead of sampling where a claim offers both",
        )
        parser.add_argument("--output", type=str, default=None, help="Also write the report to this file")
        parser.add_argument("--list", action="store_true", help="List the claim registry and exit")
        add_budget_arguments(parser)

    def handle(self, **options):
        ids = [claim_id.strip() for claim_id in options["claims"].split(",") if claim_id.strip()]
        try:
            claims = get_claims(ids, include_slow=options["slow"])
        except HarnessError as e:
            raise usage_error(e) from e

        if options["list"]:
            for claim in claims:
                self.stdout.write(f"{claim.id}{' (slow)' if claim.slow else ''}: {claim.description}")
            return

        budget = budget_from(options)
        ctx = ClaimContext(
            budget=budget,
            seed=options["seed"],
            instances=options["budget_instances"],
            exhaustive=options["exhaustive"],
            jobs=jobs_from(options),
        )

        transcript = []
        statuses = []
        for claim in claims:
            report = run_claim(claim, ctx)
            lines = report.to_lines()
            write_lines(self, lines)
            transcript.extend(lines)
            statuses.append(report.status)

        summary = stat_line(
            {
                "claims": len(statuses),
                "confirmed": statuses.count("confirmed"),
                "refuted": statuses.count("refuted"),
                "budget_exceeded": statuses.count("budget-exceeded"),
                "seed": ctx.seed,
                "exhaustive": ctx.exhaustive,
                "elapsed": budget.elapsed(),
            }
        )
        self.stdout.write(summary)
        transcript.append(summary)

        if options["output"]:
            Path(options["output"]).write_text("\n".join(transcript) + "\n")
            self.stdout.write(self.style.SUCCESS(f"Report written to {options['output']}"))

        finish(statuses, "claims refuted or unfinished; see the STATUS lines")
