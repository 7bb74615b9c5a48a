"""
Pytest configuration for the branchpair project.
"""

import pytest

from goodpairs.digraph import build
from goodpairs.families import bad_multi, h4_digraph, w_digraph
from goodpairs.figures import E4, F4, ST4


@pytest.fixture
def two_cycle():
    return build(2, [(0, 1), (1, 0)])


@pytest.fixture
def e4():
    return E4.host()


@pytest.fixture
def f4():
    return F4.host()


@pytest.fixture
def st4():
    """The strong tournament on four vertices, labelled a, b, c, d."""
    return ST4.host()


@pytest.fixture
def w():
    return w_digraph()


@pytest.fixture
def h4():
    return h4_digraph()


@pytest.fixture
def badmulti():
    return bad_multi()


@pytest.fixture
def short_budget(settings):
    """Keep harness runs bounded when a test asks for default budgets."""
    settings.BRANCHPAIR_BUDGET_SECS = 120
    settings.BRANCHPAIR_BUDGET_INSTANCES = 20
    settings.BRANCHPAIR_JOBS = 1
    return settings
