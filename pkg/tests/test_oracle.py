import random

import pytest
from hypothesis import given, settings

from conftest import instances, make, random_instance
from enumerate import all_feasible
from cpematch.model import is_c_cpe
from cpematch.oracle import SizeLimitError, brute_force, fpt_2k, fpt_branch, noncrossing_optimum
from cpematch.reduce import solve


def test_empty_graph():
    inst = make(0, 0, [])
    assert brute_force(inst).weight == 0
    assert fpt_2k(inst).weight == 0


def test_four_edge(four_edge, four_edge_heavy):
    # by hand over 16 subsets: {e1, e2} is the unique best crossing-free set
    sol = brute_force(four_edge)
    assert (sol.weight, sol.matching) == (10, {0, 1})
    assert fpt_2k(four_edge_heavy).weight == brute_force(four_edge_heavy).weight == 12


def test_square_and_triangle(square_inst, triangle_inst):
    assert brute_force(square_inst).weight == 4
    assert brute_force(triangle_inst).weight == 3
    assert fpt_2k(square_inst).weight == 4
    assert fpt_2k(triangle_inst).weight == 3


def test_tie_break_lexicographic():
    # the two edges cross and no pair is admissible, so {e1} and {e2} tie at weight 3
    inst = make(2, 2, [(1, 2, 3), (2, 1, 3)])
    assert brute_force(inst).matching == {0}


def test_caps():
    rng = random.Random(0)
    edges = [(a, b, 1) for a in range(1, 6) for b in range(1, 6)]
    with pytest.raises(SizeLimitError):
        brute_force(make(5, 5, edges))
    inst = random_instance(rng, n_max=6, m_max=12, c=2, density=1.0)
    while inst.k <= 3:
        inst = random_instance(rng, n_max=6, m_max=12, c=2, density=1.0)
    with pytest.raises(SizeLimitError):
        fpt_2k(inst, cap=3)


def test_empty_branch_is_noncrossing_optimum():
    rng = random.Random(5)
    for _ in range(100):
        inst = random_instance(rng)
        w, edges = fpt_branch(inst, [])
        assert w == solve(inst, c=0).weight
        assert w == noncrossing_optimum(inst, list(range(inst.m)))[0]
        assert is_c_cpe(edges, inst, 0)


def test_brute_force_matches_plain_enumeration():
    rng = random.Random(6)
    for _ in range(150):
        inst = random_instance(rng, n_max=5, m_max=9)
        best = max(inst.weight_of(s) for s in all_feasible(inst, inst.c))
        assert brute_force(inst).weight == best


@given(instances(n_max=5, m_max=10))
@settings(max_examples=200, deadline=None)
def test_fpt_agrees_with_brute_force(inst):
    a, b = brute_force(inst), fpt_2k(inst)
    assert a.weight == b.weight
    assert is_c_cpe(a.matching, inst) and is_c_cpe(b.matching, inst)
