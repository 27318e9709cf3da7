import random
import sys
import warnings
from pathlib import Path

import pytest
from hypothesis import strategies as st

from cpematch.model import Edge, Instance, all_crossing_pairs

sys.path.insert(0, str(Path(__file__).parent))


def make(n_a, n_b, edges, pairs=(), c=0):
    """Instance with integer weights (precision 0); ``pairs`` use 1-based edge ordinals."""
    return Instance(n_a, n_b, tuple(Edge(*e) for e in edges),
                    frozenset((e - 1, f - 1) for e, f in pairs), c, 0).checked()


def random_instance(rng: random.Random, n_max=6, m_max=12, c=None, density=None, n_min=1, m_min=0):
    n_a, n_b = rng.randint(n_min, n_max), rng.randint(n_min, n_max)
    cells = [(a, b) for a in range(1, n_a + 1) for b in range(1, n_b + 1)]
    top = min(m_max, len(cells))
    chosen = rng.sample(cells, rng.randint(min(m_min, top), top))
    edges = tuple(Edge(a, b, rng.randint(1, 9)) for a, b in chosen)
    base = Instance(n_a, n_b, edges, frozenset(), 0, 0)
    crossing = sorted(all_crossing_pairs(base))
    frac = rng.random() if density is None else density
    adm = [p for p in crossing if rng.random() < frac]
    budget = rng.randint(0, 2) if c is None else c
    return Instance(n_a, n_b, edges, frozenset(adm), budget, 0).checked()


def banded_instance(rng: random.Random, n_max=12, m_max=16, band=2, c=2):
    """Edges near the diagonal; produces long alternating crossing paths."""
    n = rng.randint(6, n_max)
    cells = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if abs(a - b) <= band]
    chosen = rng.sample(cells, min(len(cells), rng.randint(6, m_max)))
    edges = tuple(Edge(a, b, rng.randint(1, 9)) for a, b in chosen)
    base = Instance(n, n, edges, frozenset(), c, 0)
    crossing = sorted(all_crossing_pairs(base))
    keep = rng.uniform(0.6, 1.0)
    return base.with_admissible(p for p in crossing if rng.random() < keep).checked()


@st.composite
def instances(draw, n_max=5, m_max=9, c=None):
    n_a = draw(st.integers(1, n_max))
    n_b = draw(st.integers(1, n_max))
    cells = [(a, b) for a in range(1, n_a + 1) for b in range(1, n_b + 1)]
    chosen = draw(st.lists(st.sampled_from(cells), max_size=m_max, unique=True)) if cells else []
    weights = draw(st.lists(st.integers(1, 20), min_size=len(chosen), max_size=len(chosen)))
    edges = tuple(Edge(a, b, w) for (a, b), w in zip(chosen, weights))
    base = Instance(n_a, n_b, edges, frozenset(), 0, 0)
    crossing = sorted(all_crossing_pairs(base))
    mask = draw(st.lists(st.booleans(), min_size=len(crossing), max_size=len(crossing)))
    budget = draw(st.integers(0, 2)) if c is None else c
    return Instance(n_a, n_b, edges, frozenset(p for p, keep in zip(crossing, mask) if keep),
                    budget, 0).checked()


# Four edges: e1=(a1,b1,5), e2=(a2,b2,5), e3=(a1,b2,w), e4=(a2,b1,w); only e3,e4 cross.
@pytest.fixture
def four_edge():
    return make(2, 2, [(1, 1, 5), (2, 2, 5), (1, 2, 4), (2, 1, 4)])


@pytest.fixture
def four_edge_heavy():
    return make(2, 2, [(1, 1, 5), (2, 2, 5), (1, 2, 6), (2, 1, 6)], pairs=[(3, 4)], c=1)


@pytest.fixture
def triangle_inst():
    """Three mutually crossing edges, all pairs admissible, unit weights."""
    return make(3, 3, [(1, 3, 1), (2, 2, 1), (3, 1, 1)], pairs=[(1, 2), (1, 3), (2, 3)], c=2)


@pytest.fixture
def square_inst():
    """Four edges whose crossing graph is a 4-cycle, unit weights."""
    return make(4, 4, [(1, 3, 1), (3, 1, 1), (4, 2, 1), (2, 4, 1)],
                pairs=[(1, 2), (1, 3), (2, 4), (3, 4)], c=2)


# Zig-zag path of eight edges e1..e8 crossing consecutively (upper links throughout).
UPPER_PATH = [(1, 2), (3, 1), (2, 4), (5, 3), (4, 6), (7, 5), (6, 8), (8, 7)]
# Same drawing with the layers swapped (lower links throughout).
LOWER_PATH = [(b, a) for a, b in UPPER_PATH]


def path_instance(coords, weights=None):
    weights = weights or list(range(1, len(coords) + 1))
    edges = [(a, b, w) for (a, b), w in zip(coords, weights)]
    pairs = [(t, t + 1) for t in range(1, len(coords))]
    return make(8, 8, edges, pairs, c=2)


@pytest.fixture(autouse=True)
def _quiet_generator_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        yield
