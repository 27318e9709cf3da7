"""Seeded random instances."""

from __future__ import annotations

import warnings
from decimal import Decimal

import numpy as np

from .model import Edge, Instance, canonical_pair, scale_weight

# above this many edge pairs, admissible pairs are drawn by rejection sampling
_ENUMERATION_LIMIT = 2_000_000


def count_crossings(a: np.ndarray, b: np.ndarray, chunk: int = 2048) -> int:
    total = 0
    for start in range(0, len(a), chunk):
        da = a[start:start + chunk, None] - a[None, :]
        db = b[start:start + chunk, None] - b[None, :]
        total += int(np.count_nonzero(da * db < 0))
    return total // 2


def generate(n_a: int, n_b: int, m: int, target_k: int, c: int = 0,
             weight_range: tuple = (1, 10), seed: int = 0, precision: int = 6) -> Instance:
    """Random instance with ``m`` distinct edges and up to ``target_k`` admissible pairs.

    Weights are uniform over ``weight_range`` at the given decimal precision.
    Admissible pairs are a uniform sample of the crossing pairs; when fewer than
    ``target_k`` exist, all are taken and a warning is issued.
    """
    if m > n_a * n_b:
        raise ValueError(f"m={m} exceeds n_a*n_b={n_a * n_b}")
    if m < 0 or target_k < 0:
        raise ValueError("m and target_k must be non-negative")
    lo, hi = (scale_weight(Decimal(str(w)), precision) for w in weight_range)
    if lo <= 0 or hi < lo:
        raise ValueError(f"invalid weight range {weight_range}")
    rng = np.random.default_rng(seed)
    cells = rng.choice(n_a * n_b, size=m, replace=False) if m else np.zeros(0, dtype=np.int64)
    a = cells // n_b + 1
    b = cells % n_b + 1
    weights = rng.integers(lo, hi + 1, size=m)
    edges = tuple(Edge(int(x), int(y), int(w)) for x, y, w in zip(a, b, weights))

    pairs = _sample_pairs(a, b, target_k, rng)
    return Instance(n_a, n_b, edges, frozenset(pairs), c, precision).checked()


def _sample_pairs(a: np.ndarray, b: np.ndarray, target_k: int, rng) -> set[tuple[int, int]]:
    m = len(a)
    if target_k == 0 or m < 2:
        if target_k:
            warnings.warn(f"target_k={target_k} clamped to 0 crossing pairs", stacklevel=3)
        return set()
    if m * (m - 1) // 2 <= _ENUMERATION_LIMIT:
        iu, ju = np.triu_indices(m, 1)
        mask = (a[iu] - a[ju]) * (b[iu] - b[ju]) < 0
        cand = np.stack([iu[mask], ju[mask]], axis=1)
        if target_k > len(cand):
            warnings.warn(f"target_k={target_k} clamped to {len(cand)} crossing pairs", stacklevel=3)
            target_k = len(cand)
        chosen = rng.choice(len(cand), size=target_k, replace=False)
        return {(int(cand[x, 0]), int(cand[x, 1])) for x in sorted(chosen)}
    total = count_crossings(a, b)
    if target_k > total:
        warnings.warn(f"target_k={target_k} clamped to {total} crossing pairs", stacklevel=3)
        target_k = total
    if target_k * 2 > total:
        raise ValueError("dense admissible sampling on large graphs is not supported")
    pairs: set[tuple[int, int]] = set()
    while len(pairs) < target_k:
        e, f = (int(v) for v in rng.integers(0, m, size=2))
        if e != f and (a[e] - a[f]) * (b[e] - b[f]) < 0:
            pairs.add(canonical_pair(e, f))
    return pairs
