"""
Reproduction harness behind the management commands.

This package provides:
- report records, line formats and the exit-code contract
- seeded random instance generation
- exhaustive, canonical and sampled enumeration
- cross-validation of the constructive solvers against the oracle
- counterexample search for the open rooted conjectures
- the registry of reproducible claims
"""

from .claims import CLAIMS, ClaimContext, get_claims, run_claim
from .conjectures import Conjecture, check_instance, hypothesis_holds, search
from .crossval import OPERATIONS, cross_validate
from .enumeration import EnumerationTask, Filters, Mode, Predicate, canonical_form, run_enumeration
from .reports import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_REFUTED,
    EXIT_USAGE,
    HarnessError,
    InvalidTask,
    ReproReport,
    Status,
    UnknownClaim,
    UnknownOperation,
    exit_code,
    stat_line,
    status_of,
)

__all__ = [
    "HarnessError",
    "UnknownClaim",
    "UnknownOperation",
    "InvalidTask",
    "ReproReport",
    "Status",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_REFUTED",
    "EXIT_BUDGET",
    "exit_code",
    "stat_line",
    "status_of",
    "EnumerationTask",
    "Filters",
    "Mode",
    "Predicate",
    "canonical_form",
    "run_enumeration",
    "OPERATIONS",
    "cross_validate",
    "Conjecture",
    "check_instance",
    "hypothesis_holds",
    "search",
    "CLAIMS",
    "ClaimContext",
    "get_claims",
    "run_claim",
]
