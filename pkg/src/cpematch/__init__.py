"""Exact maximum-weight matchings with at most c crossings per edge (c <= 2)
on 2-layered bipartite drawings, via non-contact trapezoid selection."""

from .model import (
    Edge,
    Instance,
    InstanceError,
    NotAMatchingError,
    Solution,
    all_crossing_pairs,
    crosses,
    is_c_cpe,
    validate,
)
from .ntsp import PrefixMax, Trapezoid, TrapCollection, dag_longest_path, precedes, reconstruct, select_trape
from .oracle import brute_force, fpt_2k
from .reduce import best_paths, build_c0, build_c1, build_c2, enumerate_cycles, solve

__version__ = "0.1.0"
