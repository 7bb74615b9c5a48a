"""
Report records and the exit-code contract of the harness commands.

Every report is emitted as plain text lines with a fixed prefix (CLAIM,
STATUS, CERT, STAT) so runs can be grepped and diffed.
"""

from dataclasses import dataclass, field
from enum import StrEnum

from goodpairs.digraph import emit_text

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUTED = 2
EXIT_BUDGET = 3


class HarnessError(Exception):
    """Base exception for the reproduction harness."""

    pass


class UnknownClaim(HarnessError):
    """Exception raised for a claim id missing from the registry."""

    pass


class UnknownOperation(HarnessError):
    """Exception raised for an operation missing from the cross-validation registry."""

    pass


class InvalidTask(HarnessError):
    """Exception raised when an enumeration task violates its mode's limits."""

    pass


class Status(StrEnum):
    CONFIRMED = "confirmed"
    REFUTED = "refuted"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass
class ReproReport:
    """
    Outcome of one reproduced claim.

    A refuted report always carries the transcript of a counterexample
    that can be checked independently.
    """

    claim: str
    status: Status
    description: str = ""
    statistics: dict = field(default_factory=dict)
    certificates: list = field(default_factory=list)

    def __post_init__(self):
        if self.status is Status.REFUTED and not self.certificates:
            raise HarnessError(f"claim {self.claim} refuted without a counterexample transcript")

    def to_lines(self):
        lines = [f"CLAIM {self.claim} {self.description}".rstrip(), f"STATUS {self.claim} {self.status}"]
        if self.statistics:
            lines.append(stat_line(self.statistics, claim=self.claim))
        lines.extend(self.certificates)
        return lines


def stat_line(values, **head):
    """One STAT line of key=value fields, head fields first."""
    fields = {**head, **values}
    return "STAT " + " ".join(f"{key}={_plain(value)}" for key, value in fields.items())


def _plain(value):
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.3f}"
    return str(value).replace(" ", "_")


def counterexample_lines(d, certificate=None):
    """Transcript of a digraph (text format, commented) plus its certificate."""
    lines = [f"CERT counterexample n={d.n} arcs={d.arc_count}"]
    lines.extend(f"# {line}" for line in emit_text(d).splitlines())
    if certificate is not None:
        lines.extend(certificate.to_transcript(d))
    return lines


def status_of(summary):
    """Status of a harness summary dict with failures and budget_exceeded fields."""
    if summary.get("failures"):
        return Status.REFUTED
    if summary.get("budget_exceeded"):
        return Status.BUDGET_EXCEEDED
    return Status.CONFIRMED


def exit_code(statuses):
    """2 if anything was refuted, else 3 if a budget ran out, else 0."""
    statuses = list(statuses)
    if Status.REFUTED in statuses:
        return EXIT_REFUTED
    if Status.BUDGET_EXCEEDED in statuses:
        return EXIT_BUDGET
    return EXIT_OK


def merge_shards(summaries, constant, counts, listed):
    """
    Combine shard summaries in shard order.

    constant keys are taken from shard 0, counts are summed, listed
    lists are concatenated and budget_exceeded is true if any shard ran out.
    """
    summaries = sorted(summaries, key=lambda s: s["shard"])
    if not summaries:
        return {}
    merged = {key: summaries[0][key] for key in (*constant, "shards")}
    for key in counts:
        merged[key] = sum(s[key] for s in summaries)
    merged["budget_exceeded"] = any(s["budget_exceeded"] for s in summaries)
    merged[listed] = [lines for s in summaries for lines in s[listed]]
    return merged
