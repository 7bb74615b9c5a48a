"""
Constructive good-pair solvers.

This package provides polynomial constructions for:
- semicomplete digraphs (good r-pairs and the exception certificate)
- digraphs on at most six vertices, with the extension lemmas
- 2-arc-strong co-bipartite digraphs
- 2-arc-strong digraphs with independence number at most 2
"""

from .alpha2 import alpha2_good_pair, grow_from_seed, hamiltonian_endgame
from .base import PreconditionViolated, SolveReport, SolverError, SoundnessError, Strategy
from .cobipartite import cobipartite_good_pair, cobipartite_report
from .semicomplete import (
    four_vertex_r_pair,
    semicomplete_good_pair,
    semicomplete_good_r_pair,
    semicomplete_nonstrong_pair,
    semicomplete_util_extend,
)
from .small import extend_by_buffer, extend_by_three, is_e4, small_good_pair, three_vertex_pair

__all__ = [
    "SolverError",
    "PreconditionViolated",
    "SoundnessError",
    "SolveReport",
    "Strategy",
    "semicomplete_nonstrong_pair",
    "semicomplete_util_extend",
    "semicomplete_good_r_pair",
    "semicomplete_good_pair",
    "four_vertex_r_pair",
    "extend_by_buffer",
    "extend_by_three",
    "three_vertex_pair",
    "is_e4",
    "small_good_pair",
    "cobipartite_good_pair",
    "cobipartite_report",
    "alpha2_good_pair",
    "grow_from_seed",
    "hamiltonian_endgame",
]
