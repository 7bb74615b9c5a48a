"""Wall-clock and instance budgets shared by the oracle and the harness."""

import time
from dataclasses import dataclass, field

from django.conf import settings


@dataclass
class Budget:
    """
    A search budget.

    seconds bounds wall-clock time from creation, instances bounds how many
    digraphs a sampled run may examine. None means unbounded.
    """

    seconds: float | None = None
    instances: int | None = None
    started: float = field(default_factory=time.monotonic)

    @classmethod
    def from_settings(cls, seconds=None, instances=None):
        """Budget with BRANCHPAIR_BUDGET_SECS / BRANCHPAIR_BUDGET_INSTANCES as defaults."""
        return cls(
            seconds=settings.BRANCHPAIR_BUDGET_SECS if seconds is None else seconds,
            instances=settings.BRANCHPAIR_BUDGET_INSTANCES if instances is None else instances,
        )

    @classmethod
    def unlimited(cls):
        return cls()

    def elapsed(self):
        return time.monotonic() - self.started

    def expired(self):
        return self.seconds is not None and self.elapsed() > self.seconds

    def remaining(self):
        """Seconds left, or None when unbounded."""
        if self.seconds is None:
            return None
        return max(0.0, self.seconds - self.elapsed())
