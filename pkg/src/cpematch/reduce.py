"""Reduction of budgeted-crossing matching (c in {0, 1, 2}) to non-contact trapezoid selection.

Every c-CPE matching splits into connected pieces (components of its crossing
graph) that are pairwise strictly ordered left to right.  Each candidate piece
becomes one trapezoid spanning its edges, and the best chain of trapezoids is
an optimal matching.

For c = 2 a connected piece is a single edge, a 3- or 4-cycle, or a path.  Paths
are grown over admissible pairs: an even path is a sequence of pairs chained
by *links*, an odd path starts with a *wedge* (two pairs sharing an edge) and
continues with links.  Lower links/wedges are upper links/wedges with the two
layers swapped, so one DP engine over a layer-oriented :class:`LinkGraph`
serves all four (parity, side) combinations.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations

from .model import (
    Edge,
    Instance,
    Pair,
    Solution,
    SUPPORTED_BUDGETS,
    canonical_pair,
    crosses,
    ordered_pair,
    precedes_edge,
    shares_endpoint,
    span,
)
from .ntsp import Trapezoid, TrapCollection, reconstruct, select_trape

UPPER = "upper"
LOWER = "lower"


class UnsupportedBudgetError(ValueError):
    pass


# -- pair relations on A-ordered pairs ------------------------------------------------


def is_upper_link(x: Pair, y: Pair, instance: Instance) -> bool:
    """``x = (e_X, e'_X)`` and ``y = (e_Y, e'_Y)`` are ordered pairs (upper-layer order)."""
    E = instance.edges
    ex, ex2 = E[x[0]], E[x[1]]
    ey, ey2 = E[y[0]], E[y[1]]
    return (precedes_edge(ex, ey) and precedes_edge(ex, ey2)
            and instance.is_admissible(x[1], y[0]) and precedes_edge(ex2, ey2))


def is_lower_link(x: Pair, y: Pair, instance: Instance) -> bool:
    E = instance.edges
    ex, ex2 = E[x[0]], E[x[1]]
    ey, ey2 = E[y[0]], E[y[1]]
    return (precedes_edge(ex, ey) and instance.is_admissible(x[0], y[1])
            and precedes_edge(ex2, ey) and precedes_edge(ex2, ey2))


def is_upper_wedge(x: Pair, z: Pair, instance: Instance) -> bool:
    E = instance.edges
    return x[0] == z[0] and precedes_edge(E[x[1]], E[z[1]])


def is_lower_wedge(x: Pair, z: Pair, instance: Instance) -> bool:
    E = instance.edges
    return x[1] == z[1] and precedes_edge(E[x[0]], E[z[0]])


# -- link graph ------------------------------------------------------------------------


class LinkGraph:
    """Links and wedges between admissible pairs for one layer orientation.

    With ``side == LOWER`` the layers are swapped: pairs are ordered by their
    lower-layer index and ``lam``/``gam`` refer to lower-layer positions.  Upper
    links in the swapped view are exactly lower links of the original drawing.
    Nodes are pair ids (positions in ``instance.pairs``).
    """

    def __init__(self, instance: Instance, side: str = UPPER):
        if side not in (UPPER, LOWER):
            raise ValueError(f"unknown side {side!r}")
        self.instance = instance
        self.side = side
        self.pairs = instance.pairs
        self.index = {p: x for x, p in enumerate(self.pairs)}
        E = instance.edges
        primary = (lambda e: E[e].a) if side == UPPER else (lambda e: E[e].b)

        k = len(self.pairs)
        self.left = [0] * k
        self.right = [0] * k
        for x, (e, f) in enumerate(self.pairs):
            self.left[x], self.right[x] = (e, f) if primary(e) < primary(f) else (f, e)
        self.lam = [primary(e) for e in self.left]
        self.gam = [primary(e) for e in self.right]
        self.weight = [E[e].weight + E[f].weight for e, f in self.pairs]

        as_left: dict[int, list[int]] = defaultdict(list)
        partners: dict[int, list[int]] = defaultdict(list)
        for x in range(k):
            as_left[self.left[x]].append(x)
            e, f = self.pairs[x]
            partners[e].append(f)
            partners[f].append(e)

        self.next_link: list[list[int]] = [[] for _ in range(k)]
        self.next_wedge: list[list[int]] = [[] for _ in range(k)]
        self.prev_link: list[list[int]] = [[] for _ in range(k)]
        for x in range(k):
            ex, ex2 = E[self.left[x]], E[self.right[x]]
            for f in partners[self.right[x]]:
                for y in as_left[f]:
                    ey2 = E[self.right[y]]
                    if (precedes_edge(ex, E[f]) and precedes_edge(ex, ey2)
                            and precedes_edge(ex2, ey2)):
                        self.next_link[x].append(y)
            for y in as_left[self.left[x]]:
                if y != x and precedes_edge(ex2, E[self.right[y]]):
                    self.next_wedge[x].append(y)
            self.next_link[x].sort()
            self.next_wedge[x].sort()
        for x in range(k):
            for y in self.next_link[x]:
                self.prev_link[y].append(x)

    def ordered(self, x: int) -> Pair:
        return self.left[x], self.right[x]

    def reachable(self, x: int, odd: bool = False) -> set[int]:
        """Pairs reachable from ``x`` (first hop a wedge when ``odd``, links afterwards)."""
        first = self.next_wedge[x] if odd else self.next_link[x]
        seen = set(first)
        stack = list(first)
        while stack:
            z = stack.pop()
            for y in self.next_link[z]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen


# -- path tables -----------------------------------------------------------------------


@dataclass
class PathTables:
    """Best (X, Y)-path weights from one source pair X, for one parity and side.

    ``rho(Y, j)`` is the best weight of a path ending in ``Y`` whose last hop
    comes from a pair with right corner at most ``j`` (on the side's primary
    layer); it is a non-decreasing step function stored as breakpoints.
    ``None`` stands for "no such path".
    """

    graph: LinkGraph = field(repr=False)
    source: int
    odd: bool
    keys: dict[int, list[int]] = field(default_factory=dict)
    vals: dict[int, list[int]] = field(default_factory=dict)
    chis: dict[int, list[int]] = field(default_factory=dict)
    delta: dict[int, bool] = field(default_factory=dict)

    @property
    def side(self) -> str:
        return self.graph.side

    @property
    def parity(self) -> str:
        return "odd" if self.odd else "even"

    def _id(self, y) -> int:
        return y if isinstance(y, int) else self.graph.index[canonical_pair(*y)]

    def _at(self, y: int, j: int) -> int:
        keys = self.keys.get(y)
        if not keys:
            return -1
        return bisect_right(keys, j) - 1

    def rho(self, y, j: int) -> int | None:
        y = self._id(y)
        pos = self._at(y, j)
        return None if pos < 0 else self.vals[y][pos]

    def chi(self, y, j: int) -> Pair | None:
        y = self._id(y)
        pos = self._at(y, j)
        return None if pos < 0 else self.graph.pairs[self.chis[y][pos]]

    def best(self, y) -> int | None:
        y = self._id(y)
        return self.rho(y, self.graph.gam[y] - 1)

    def values(self, y) -> list[int | None]:
        """``rho(Y, j)`` for every ``j`` in ``[lam(Y) + 1, gam(Y) - 1]``."""
        y = self._id(y)
        g = self.graph
        return [self.rho(y, j) for j in range(g.lam[y] + 1, g.gam[y])]

    def targets(self) -> list[Pair]:
        """Pairs Y with a finite best path weight, in pair-id order."""
        return [self.graph.pairs[y] for y in sorted(self.keys) if self.keys[y]]

    def trace(self, y) -> list[Pair]:
        """Admissible pairs along the best path, from the source to ``y``."""
        g = self.graph
        y = self._id(y)
        if not self.keys.get(y):
            raise KeyError(f"no path from {g.pairs[self.source]} to {g.pairs[y]}")
        seq = [y]
        cur, j = y, g.gam[y] - 1
        while True:
            z = self.chis[cur][self._at(cur, j)]
            seq.append(z)
            if z == self.source:
                break
            cur, j = z, g.lam[cur] - 1
        seq.reverse()
        return [g.pairs[x] for x in seq]

    def payload(self, y) -> frozenset[int]:
        return frozenset(e for pair in self.trace(y) for e in pair)


def _path_dp(graph: LinkGraph, x: int, odd: bool) -> PathTables:
    """Shared engine for the four path DPs (source ``x``, parity by ``odd``)."""
    tables = PathTables(graph, x, odd)
    first = graph.next_wedge[x] if odd else graph.next_link[x]
    if not first:
        return tables
    reach = graph.reachable(x, odd)
    lam, gam, weight = graph.lam, graph.gam, graph.weight
    keys, vals, chis = tables.keys, tables.vals, tables.chis

    def rho_at(z: int, j: int) -> int | None:
        ks = keys[z]
        pos = bisect_right(ks, j) - 1
        return vals[z][pos] if pos >= 0 else None

    shared_base = weight[x]
    queue = deque()
    base = set(first)
    for y in first:
        if odd:
            # the wedge shares one edge; count it once
            shared = graph.left[x]
            w = shared_base + weight[y] - graph.instance.edges[shared].weight
        else:
            w = shared_base + weight[y]
        keys[y], vals[y], chis[y] = [gam[x]], [w], [x]
        tables.delta[y] = True
        queue.append(y)

    pending = {}
    for y in reach:
        if y in base:
            continue
        tables.delta[y] = False
        pending[y] = sum(1 for z in graph.prev_link[y] if z in reach)

    while queue:
        z = queue.popleft()
        for y in graph.next_link[z]:
            if y not in pending:
                continue
            pending[y] -= 1
            if pending[y]:
                continue
            del pending[y]
            cands = []
            for p in graph.prev_link[y]:
                if p in reach:
                    v = rho_at(p, lam[y] - 1)
                    if v is not None:
                        cands.append((gam[p], -(v + weight[y]), p))
            cands.sort()
            ks, vs, cs = [], [], []
            current = None
            for j, neg, p in cands:
                v = -neg
                if current is None or v > current:
                    if ks and ks[-1] == j:
                        vs[-1], cs[-1] = v, p
                    else:
                        ks.append(j)
                        vs.append(v)
                        cs.append(p)
                    current = v
            keys[y], vals[y], chis[y] = ks, vs, cs
            tables.delta[y] = True
            queue.append(y)
    return tables


def _source_id(x, graph: LinkGraph) -> int:
    if isinstance(x, int):
        return x
    return graph.index[canonical_pair(*x)]


def even_upper(x, instance: Instance, graph: LinkGraph | None = None) -> PathTables:
    graph = graph or LinkGraph(instance, UPPER)
    return _path_dp(graph, _source_id(x, graph), odd=False)


def even_lower(x, instance: Instance, graph: LinkGraph | None = None) -> PathTables:
    graph = graph or LinkGraph(instance, LOWER)
    return _path_dp(graph, _source_id(x, graph), odd=False)


def odd_paths(x, instance: Instance, side: str = UPPER,
              graph: LinkGraph | None = None) -> PathTables:
    graph = graph or LinkGraph(instance, side)
    return _path_dp(graph, _source_id(x, graph), odd=True)


@dataclass(frozen=True)
class PathEntry:
    weight: int
    payload: frozenset[int]
    kind: str


@dataclass
class PathResult:
    """Max-weight (X, Y)-path for every ordered pair of admissible pairs that has one."""

    entries: dict[tuple[Pair, Pair], PathEntry]

    def weight(self, x: Pair, y: Pair) -> int | None:
        entry = self.entries.get((canonical_pair(*x), canonical_pair(*y)))
        return None if entry is None else entry.weight

    def payload(self, x: Pair, y: Pair) -> frozenset[int] | None:
        entry = self.entries.get((canonical_pair(*x), canonical_pair(*y)))
        return None if entry is None else entry.payload

    def __len__(self) -> int:
        return len(self.entries)


def best_paths(instance: Instance) -> PathResult:
    graphs = {side: LinkGraph(instance, side) for side in (UPPER, LOWER)}
    pairs = instance.pairs
    entries: dict[tuple[Pair, Pair], PathEntry] = {}
    for x, pair in enumerate(pairs):
        entries[(pair, pair)] = PathEntry(graphs[UPPER].weight[x], frozenset(pair), "pair")
        for odd in (False, True):
            for side in (UPPER, LOWER):
                tables = _path_dp(graphs[side], x, odd)
                kind = f"{tables.parity}-{side}"
                for y in sorted(tables.keys):
                    if not tables.keys[y]:
                        continue
                    w = tables.vals[y][-1]
                    key = (pair, pairs[y])
                    if key not in entries or w > entries[key].weight:
                        entries[key] = PathEntry(w, tables.payload(y), kind)
    return PathResult(entries)


# -- cycles ----------------------------------------------------------------------------


def enumerate_cycles(instance: Instance) -> list[frozenset[int]]:
    """All 3- and 4-edge matchings whose crossing graph is a cycle of admissible pairs."""
    E = instance.edges
    partners: dict[int, set[int]] = defaultdict(set)
    for e, f in instance.pairs:
        partners[e].add(f)
        partners[f].add(e)
    found: set[frozenset[int]] = set()
    for e, f in instance.pairs:
        for g in partners[e] & partners[f]:
            if g > f:
                found.add(frozenset((e, f, g)))
    pairs = instance.pairs
    for x, y in combinations(pairs, 2):
        quad = set(x) | set(y)
        if len(quad) != 4 or frozenset(quad) in found:
            continue
        if _is_four_cycle(sorted(quad), E, instance):
            found.add(frozenset(quad))
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def _is_four_cycle(quad: list[int], E: tuple[Edge, ...], instance: Instance) -> bool:
    degree = dict.fromkeys(quad, 0)
    for e, f in combinations(quad, 2):
        if crosses(E[e], E[f]):
            if not instance.is_admissible(e, f):
                return False
            degree[e] += 1
            degree[f] += 1
        elif shares_endpoint(E[e], E[f]):
            return False
    return all(d == 2 for d in degree.values())


# -- trapezoid collections -------------------------------------------------------------


def _trapezoid(edges, instance: Instance) -> Trapezoid:
    payload = frozenset(edges)
    la, ga, lb, gb = span(payload, instance)
    return Trapezoid(la, ga, lb, gb, instance.weight_of(payload), payload)


def build_c0(instance: Instance) -> TrapCollection:
    traps = [Trapezoid(e.a, e.a, e.b, e.b, e.weight, frozenset((idx,)))
             for idx, e in enumerate(instance.edges)]
    return TrapCollection(instance.n_a, instance.n_b, tuple(traps))


def build_c1(instance: Instance) -> TrapCollection:
    traps = list(build_c0(instance).traps)
    traps += [_trapezoid(pair, instance) for pair in instance.pairs]
    return TrapCollection(instance.n_a, instance.n_b, tuple(traps))


def build_c2(instance: Instance, paths: PathResult | None = None) -> TrapCollection:
    traps = list(build_c0(instance).traps)
    traps += [_trapezoid(cycle, instance) for cycle in enumerate_cycles(instance)]
    paths = paths if paths is not None else best_paths(instance)
    for key in sorted(paths.entries):
        entry = paths.entries[key]
        traps.append(_trapezoid(entry.payload, instance))
    return TrapCollection(instance.n_a, instance.n_b, tuple(traps))


BUILDERS = {0: build_c0, 1: build_c1, 2: build_c2}


def solve(instance: Instance, c: int | None = None) -> Solution:
    """Maximum-weight c-CPE matching via the trapezoid reduction."""
    budget = instance.c if c is None else c
    if budget not in SUPPORTED_BUDGETS:
        raise UnsupportedBudgetError(f"crossing budget c={budget} is not supported (0, 1 or 2)")
    if budget != instance.c:
        instance = instance.with_budget(budget)
    coll = BUILDERS[budget](instance)
    tables = select_trape(coll)
    chosen = reconstruct(coll, tables)
    matching = frozenset(e for s in chosen for e in coll.traps[s].payload)
    solution = Solution.from_edges(instance, matching)
    if solution.weight != tables.omega_star:
        raise RuntimeError(f"reconstructed weight {solution.weight} != optimum {tables.omega_star}")
    return solution


__all__ = [
    "UPPER", "LOWER", "LinkGraph", "PathTables", "PathEntry", "PathResult",
    "UnsupportedBudgetError", "best_paths", "build_c0", "build_c1", "build_c2",
    "enumerate_cycles", "even_lower", "even_upper", "is_lower_link", "is_lower_wedge",
    "is_upper_link", "is_upper_wedge", "odd_paths", "ordered_pair", "solve",
]
