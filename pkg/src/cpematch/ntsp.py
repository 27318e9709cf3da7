"""Non-contact trapezoid selection.

A trapezoid spans upper indices ``lam_a..gam_a`` and lower indices
``lam_b..gam_b``.  Two trapezoids are compatible when one lies strictly to the
left of the other on both layers; the problem is to pick a maximum-weight set
of pairwise compatible trapezoids (a chain under :func:`precedes`).

:func:`select_trape` solves it with a left-to-right sweep in
``O(z log n + n)``; :func:`dag_longest_path` is an ``O(z^2)`` reference
solver over the explicit precedence DAG.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence


@dataclass(frozen=True, eq=False)
class Trapezoid:
    lam_a: int
    gam_a: int
    lam_b: int
    gam_b: int
    weight: int
    payload: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.lam_a > self.gam_a or self.lam_b > self.gam_b:
            raise ValueError(f"inverted corners in {self.corners}")
        if self.weight <= 0:
            raise ValueError(f"trapezoid weight must be positive, got {self.weight}")

    @property
    def corners(self) -> tuple[int, int, int, int]:
        return self.lam_a, self.gam_a, self.lam_b, self.gam_b

    @property
    def is_segment(self) -> bool:
        return self.lam_a == self.gam_a and self.lam_b == self.gam_b


@dataclass(frozen=True)
class TrapCollection:
    n_a: int
    n_b: int
    traps: tuple[Trapezoid, ...]

    def __post_init__(self):
        object.__setattr__(self, "traps", tuple(self.traps))
        for t in self.traps:
            if not (1 <= t.lam_a and t.gam_a <= self.n_a and 1 <= t.lam_b and t.gam_b <= self.n_b):
                raise ValueError(f"trapezoid {t.corners} outside rows {self.n_a}x{self.n_b}")

    def __len__(self) -> int:
        return len(self.traps)


def precedes(s: Trapezoid, t: Trapezoid) -> bool:
    return s.gam_a < t.lam_a and s.gam_b < t.lam_b


def is_chain(traps: Sequence[Trapezoid]) -> bool:
    return all(precedes(s, t) or precedes(t, s)
               for x, s in enumerate(traps) for t in traps[x + 1:])


class PrefixMax:
    """Fenwick tree over positions ``1..size`` answering prefix maxima.

    Stored values only ever increase, which is all the sweep needs; every
    position starts at ``initial``.
    """

    __slots__ = ("size", "tree")

    def __init__(self, size: int, initial: int = 0):
        self.size = size
        self.tree = [initial] * (size + 1)

    def update(self, pos: int, value: int) -> None:
        """Raise position ``pos`` to at least ``value``."""
        tree = self.tree
        while pos <= self.size:
            if tree[pos] < value:
                tree[pos] = value
            pos += pos & -pos

    def query(self, pos: int) -> int:
        """Maximum over positions ``1..pos``; ``pos <= 0`` yields the initial value."""
        tree = self.tree
        best = tree[0]
        while pos > 0:
            if tree[pos] > best:
                best = tree[pos]
            pos -= pos & -pos
        return best


@dataclass
class SweepTables:
    mu: list[int]
    omega_star: int


def _buckets(coll: TrapCollection, key: Callable[[Trapezoid], int]) -> list[list[int]]:
    buckets: list[list[int]] = [[] for _ in range(coll.n_a + 1)]
    for idx, t in enumerate(coll.traps):
        buckets[key(t)].append(idx)
    return buckets


def select_trape(coll: TrapCollection, index_factory=PrefixMax) -> SweepTables:
    """Compute the optimal chain weight and the per-trapezoid values ``mu``.

    ``mu[s]`` is the best weight of a chain whose rightmost member is
    trapezoid ``s``.  An empty collection has optimum 0.
    """
    traps = coll.traps
    by_lam = _buckets(coll, lambda t: t.lam_a)
    by_gam = _buckets(coll, lambda t: t.gam_a)
    best_at = index_factory(coll.n_b)
    mu = [0] * len(traps)
    omega_star = 0
    for i in range(1, coll.n_a + 1):
        # all lam_a == i reads must see the state of rows < i
        for s in by_lam[i]:
            t = traps[s]
            mu[s] = t.weight + best_at.query(t.lam_b - 1)
        for s in by_gam[i]:
            best_at.update(traps[s].gam_b, mu[s])
            if mu[s] > omega_star:
                omega_star = mu[s]
    return SweepTables(mu, omega_star)


class CorruptTablesError(RuntimeError):
    pass


def reconstruct(coll: TrapCollection, tables: SweepTables) -> list[int]:
    """Recover an optimal chain (trapezoid indices, left to right) from sweep tables.

    Ties are broken towards the lowest trapezoid index.
    """
    traps = coll.traps
    by_gam = _buckets(coll, lambda t: t.gam_a)
    chosen = []
    alpha = tables.omega_star
    i, q = coll.n_a, coll.n_b
    while alpha > 0:
        if i < 1:
            raise CorruptTablesError(f"no trapezoid accounts for remaining weight {alpha}")
        for s in by_gam[i]:
            t = traps[s]
            if t.gam_b <= q and tables.mu[s] == alpha:
                chosen.append(s)
                alpha -= t.weight
                i, q = t.lam_a, t.lam_b - 1
                break
        i -= 1
    chosen.reverse()
    return chosen


def dag_longest_path(coll: TrapCollection) -> tuple[int, list[int]]:
    """Longest path from a dummy source in the explicit precedence DAG, ``O(z^2)``."""
    traps = coll.traps
    order = sorted(range(len(traps)), key=lambda s: (traps[s].lam_a, s))
    dist: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for x, s in enumerate(order):
        best, arg = 0, None
        t = traps[s]
        for r in order[:x]:
            if precedes(traps[r], t) and dist[r] > best:
                best, arg = dist[r], r
        dist[s] = best + t.weight
        parent[s] = arg
    if not traps:
        return 0, []
    end = max(order, key=lambda s: (dist[s], -s))
    path = []
    node: int | None = end
    while node is not None:
        path.append(node)
        node = parent[node]
    path.reverse()
    return dist[end], path
