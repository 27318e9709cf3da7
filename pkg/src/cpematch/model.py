"""Core types for 2-layered bipartite graphs, crossings and c-CPE matchings.

Vertices are identified by 1-based ranks on their layer (``a_1..a_nA`` on the
upper line, ``b_1..b_nB`` on the lower line).  Edges are referenced by their
0-based position in ``Instance.edges``; file formats convert to 1-based
ordinals.  Weights are exact integers scaled by ``10**precision``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from typing import Iterable, NamedTuple

INT64_MAX = 2**63 - 1
SUPPORTED_BUDGETS = (0, 1, 2)

Pair = tuple[int, int]


class Edge(NamedTuple):
    a: int
    b: int
    weight: int


class InstanceError(ValueError):
    """Raised when an instance violates one of its invariants."""

    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = errors


class NotAMatchingError(ValueError):
    """Raised when an edge set shares an endpoint and so is not a matching."""


def canonical_pair(e: int, f: int) -> Pair:
    return (e, f) if e < f else (f, e)


def scale_weight(value, precision: int) -> int:
    """Convert a decimal-like value to an exact integer scaled by 10**precision.

    Raises ValueError if ``value`` carries more fractional digits than
    ``precision`` allows.
    """
    d = Decimal(str(value)) if not isinstance(value, Decimal) else value
    if not d.is_finite():
        raise ValueError(f"weight {value!r} is not finite")
    scaled = d.scaleb(precision)
    if scaled != scaled.to_integral_value():
        raise ValueError(f"weight {value!r} exceeds precision {precision}")
    return int(scaled)


def format_weight(value: int, precision: int) -> str:
    sign = "-" if value < 0 else ""
    value = abs(value)
    if precision == 0:
        return f"{sign}{value}"
    unit = 10**precision
    return f"{sign}{value // unit}.{value % unit:0{precision}d}"


@dataclass(frozen=True)
class Instance:
    """A weighted two-layer matching instance with a crossing budget.

    ``edges`` holds ``(a, b, weight)`` with scaled integer weights and
    ``admissible`` the set of admissible crossing pairs as canonical
    ``(e, f)`` tuples with ``e < f``.  Construction normalizes the admissible
    set but does not validate; call :func:`validate` or :meth:`checked`.
    """

    n_a: int
    n_b: int
    edges: tuple[Edge, ...]
    admissible: frozenset[Pair] = frozenset()
    c: int = 0
    precision: int = 6
    _sorted_pairs: tuple[Pair, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        pairs = frozenset(canonical_pair(int(e), int(f)) for e, f in self.admissible)
        object.__setattr__(self, "admissible", pairs)
        object.__setattr__(self, "_sorted_pairs", tuple(sorted(pairs)))

    @classmethod
    def build(cls, n_a: int, n_b: int, edges: Iterable[tuple], admissible: Iterable[Pair] = (),
              c: int = 0, precision: int = 6) -> "Instance":
        """Build from human-readable weights (int, str or Decimal), then validate."""
        scaled = [Edge(int(a), int(b), scale_weight(w, precision)) for a, b, w in edges]
        return cls(n_a, n_b, tuple(scaled), frozenset(admissible), c, precision).checked()

    def checked(self) -> "Instance":
        errors = validate(self)
        if errors:
            raise InstanceError(errors)
        return self

    def with_budget(self, c: int) -> "Instance":
        return Instance(self.n_a, self.n_b, self.edges, self.admissible, c, self.precision)

    def with_admissible(self, admissible: Iterable[Pair]) -> "Instance":
        return Instance(self.n_a, self.n_b, self.edges, frozenset(admissible), self.c, self.precision)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def k(self) -> int:
        return len(self.admissible)

    @property
    def pairs(self) -> tuple[Pair, ...]:
        """Admissible pairs in sorted order; positions in this tuple are pair ids."""
        return self._sorted_pairs

    def weight_of(self, edges: Iterable[int]) -> int:
        return sum(self.edges[e].weight for e in set(edges))

    def to_decimal(self, value: int) -> Decimal:
        return Decimal(value).scaleb(-self.precision)

    def is_admissible(self, e: int, f: int) -> bool:
        return canonical_pair(e, f) in self.admissible


@dataclass(frozen=True)
class Solution:
    matching: frozenset[int]
    weight: int
    realized_crossings: frozenset[Pair]

    @classmethod
    def from_edges(cls, instance: Instance, edges: Iterable[int]) -> "Solution":
        matching = frozenset(edges)
        return cls(matching, instance.weight_of(matching),
                   frozenset(realized_crossings(matching, instance)))


def crosses(e: Edge, f: Edge) -> bool:
    """True iff the segments of ``e`` and ``f`` intersect in the 2-layered drawing.

    Edges sharing an endpoint never cross.
    """
    return (e.a - f.a) * (e.b - f.b) < 0


def precedes_edge(e: Edge, f: Edge) -> bool:
    """Strict left-of relation on both layers."""
    return e.a < f.a and e.b < f.b


def all_crossing_pairs(instance: Instance) -> set[Pair]:
    """Every crossing pair of the graph, by an O(m^2) scan."""
    edges = instance.edges
    out = set()
    for i in range(len(edges)):
        ei = edges[i]
        for j in range(i + 1, len(edges)):
            if crosses(ei, edges[j]):
                out.add((i, j))
    return out


def shares_endpoint(e: Edge, f: Edge) -> bool:
    return e.a == f.a or e.b == f.b


def is_matching(edges: Iterable[int], instance: Instance) -> bool:
    seen_a, seen_b = set(), set()
    for e in edges:
        edge = instance.edges[e]
        if edge.a in seen_a or edge.b in seen_b:
            return False
        seen_a.add(edge.a)
        seen_b.add(edge.b)
    return True


def realized_crossings(matching: Iterable[int], instance: Instance) -> set[Pair]:
    members = sorted(set(matching))
    edges = instance.edges
    out = set()
    for x, e in enumerate(members):
        for f in members[x + 1:]:
            if crosses(edges[e], edges[f]):
                out.add((e, f))
    return out


def is_c_cpe(matching: Iterable[int], instance: Instance, c: int | None = None) -> bool:
    """Check whether ``matching`` is a c-CPE matching of ``instance``.

    ``c`` defaults to the instance's budget.  Raises NotAMatchingError when two
    members share an endpoint; returns False for crossing-constraint
    violations only.
    """
    members = set(matching)
    if not is_matching(members, instance):
        raise NotAMatchingError(f"edges {sorted(members)} share an endpoint")
    budget = instance.c if c is None else c
    degree: dict[int, int] = {}
    for pair in realized_crossings(members, instance):
        if pair not in instance.admissible:
            return False
        for e in pair:
            degree[e] = degree.get(e, 0) + 1
            if degree[e] > budget:
                return False
    return True


def validate(instance: Instance) -> list[str]:
    """Return a list of invariant violations; an empty list means the instance is valid."""
    errors = []
    if instance.n_a < 0 or instance.n_b < 0:
        errors.append(f"negative layer size ({instance.n_a}, {instance.n_b})")
    if instance.c not in SUPPORTED_BUDGETS:
        errors.append(f"unsupported crossing budget c={instance.c}")
    seen: dict[tuple[int, int], int] = {}
    total = 0
    for idx, (a, b, w) in enumerate(instance.edges):
        if not 1 <= a <= instance.n_a:
            errors.append(f"edge {idx + 1}: upper index {a} out of range 1..{instance.n_a}")
        if not 1 <= b <= instance.n_b:
            errors.append(f"edge {idx + 1}: lower index {b} out of range 1..{instance.n_b}")
        if (a, b) in seen:
            errors.append(f"edge {idx + 1}: duplicate of edge {seen[(a, b)] + 1}")
        else:
            seen[(a, b)] = idx
        if w <= 0:
            errors.append(f"edge {idx + 1}: non-positive weight")
        total += max(w, 0)
    if total > INT64_MAX:
        errors.append("total edge weight overflows 64-bit range")
    m = instance.m
    for e, f in instance.pairs:
        if e == f:
            errors.append(f"admissible pair ({e + 1}, {f + 1}): self-pair")
        elif not (0 <= e < m and 0 <= f < m):
            errors.append(f"admissible pair ({e + 1}, {f + 1}): edge index out of range")
        elif not crosses(instance.edges[e], instance.edges[f]):
            errors.append(f"admissible pair ({e + 1}, {f + 1}) not in X_G (edges do not cross)")
    return errors


def ordered_pair(pair: Pair, instance: Instance) -> Pair:
    """Order a crossing pair as ``(e, e')`` with ``e`` left of ``e'`` on the upper layer."""
    e, f = pair
    return (e, f) if instance.edges[e].a < instance.edges[f].a else (f, e)


def span(edges: Iterable[int], instance: Instance) -> tuple[int, int, int, int]:
    """Corner indices ``(lam_a, gam_a, lam_b, gam_b)`` of a non-empty edge set.

    Empty sets get the sentinels ``(0, n_a + 1, 0, n_b + 1)``.
    """
    members = list(edges)
    if not members:
        return 0, instance.n_a + 1, 0, instance.n_b + 1
    a = [instance.edges[e].a for e in members]
    b = [instance.edges[e].b for e in members]
    return min(a), max(a), min(b), max(b)
