"""Reference solvers used to check the reduction.

``brute_force`` enumerates every c-CPE matching directly from the definition.
``fpt_2k`` enumerates subsets of the admissible set and completes each one with
a crossing-free matching on the untouched part of the graph.
"""

from __future__ import annotations

from itertools import combinations

from .model import Instance, NotAMatchingError, Solution, crosses, is_c_cpe, shares_endpoint
from .ntsp import Trapezoid, TrapCollection, reconstruct, select_trape

DEFAULT_CAP = 20


class SizeLimitError(ValueError):
    pass


def brute_force(instance: Instance, cap: int = DEFAULT_CAP) -> Solution:
    """Exhaustive search over edge subsets.

    The include/exclude recursion only prunes subsets that already violate the
    definition, so every c-CPE matching is visited.  Ties go to the
    lexicographically smallest sorted edge-index tuple.
    """
    m = instance.m
    if m > cap:
        raise SizeLimitError(f"brute force refuses m={m} > cap={cap}")
    E = instance.edges
    c = instance.c
    conflict = [[False] * m for _ in range(m)]
    for e, f in combinations(range(m), 2):
        bad = shares_endpoint(E[e], E[f]) or (crosses(E[e], E[f]) and not instance.is_admissible(e, f))
        conflict[e][f] = conflict[f][e] = bad
    crossing = [[crosses(E[e], E[f]) for f in range(m)] for e in range(m)]

    best_w = 0
    best_set: tuple[int, ...] = ()
    chosen: list[int] = []
    degree = [0] * m

    def visit(i: int, weight: int) -> None:
        nonlocal best_w, best_set
        if i == m:
            current = tuple(chosen)
            if weight > best_w or (weight == best_w and current < best_set):
                best_w, best_set = weight, current
            return
        # include edge i
        if all(not conflict[i][f] for f in chosen):
            hits = [f for f in chosen if crossing[i][f]]
            if len(hits) <= c and all(degree[f] < c for f in hits):
                for f in hits:
                    degree[f] += 1
                degree[i] = len(hits)
                chosen.append(i)
                visit(i + 1, weight + E[i].weight)
                chosen.pop()
                degree[i] = 0
                for f in hits:
                    degree[f] -= 1
        visit(i + 1, weight)

    visit(0, 0)
    return Solution.from_edges(instance, best_set)


def noncrossing_optimum(instance: Instance, allowed: list[int]) -> tuple[int, list[int]]:
    """Max-weight crossing-free matching restricted to ``allowed`` edges (c = 0 sweep)."""
    E = instance.edges
    traps = tuple(Trapezoid(E[e].a, E[e].a, E[e].b, E[e].b, E[e].weight, frozenset((e,)))
                  for e in allowed)
    coll = TrapCollection(instance.n_a, instance.n_b, traps)
    tables = select_trape(coll)
    return tables.omega_star, [allowed[s] for s in reconstruct(coll, tables)]


def fpt_branch(instance: Instance, subset) -> tuple[int, list[int]] | None:
    """Best completion of one admissible subset, or None if its edges are infeasible.

    The completion uses only edges that share no endpoint with, and do not
    cross, any edge of the subset.
    """
    core = sorted({e for pair in subset for e in pair})
    try:
        if not is_c_cpe(core, instance):
            return None
    except NotAMatchingError:
        return None
    E = instance.edges
    core_edges = [E[e] for e in core]
    allowed = [idx for idx, edge in enumerate(E)
               if idx not in core
               and not any(shares_endpoint(edge, g) or crosses(edge, g) for g in core_edges)]
    w, rest = noncrossing_optimum(instance, allowed)
    return instance.weight_of(core) + w, core + rest


def fpt_2k(instance: Instance, cap: int = DEFAULT_CAP) -> Solution:
    """Enumerate all 2^k admissible subsets; exact for any budget c."""
    k = instance.k
    if k > cap:
        raise SizeLimitError(f"fpt_2k refuses k={k} > cap={cap}")
    pairs = instance.pairs
    best_w, best_edges = -1, []
    for mask in range(1 << k):
        subset = [pairs[x] for x in range(k) if mask >> x & 1]
        result = fpt_branch(instance, subset)
        if result is not None and result[0] > best_w:
            best_w, best_edges = result
    return Solution.from_edges(instance, best_edges)
