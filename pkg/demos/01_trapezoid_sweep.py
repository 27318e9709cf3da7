"""Picking non-touching trapezoids between two rows of points.

A trapezoid spans positions lam_a..gam_a on the upper row and lam_b..gam_b on
the lower row.  Two trapezoids are compatible when one lies strictly to the
left of the other on both rows.  ``select_trape`` finds the heaviest set of
pairwise compatible trapezoids with a single left-to-right sweep.
"""

import random

from cpematch import Trapezoid, TrapCollection, dag_longest_path, reconstruct, select_trape

# A small hand-made collection on rows of length 6.
traps = (
    Trapezoid(1, 2, 1, 1, 4),   # 0
    Trapezoid(2, 3, 2, 4, 7),   # 1: touches 0 on the upper row
    Trapezoid(3, 3, 2, 2, 3),   # 2
    Trapezoid(4, 6, 5, 6, 5),   # 3
    Trapezoid(5, 5, 3, 4, 2),   # 4
)
coll = TrapCollection(6, 6, traps)

tables = select_trape(coll)
print("best total weight :", tables.omega_star)
print("mu per trapezoid  :", tables.mu)
chain = reconstruct(coll, tables)
print("chosen (left->right):", [(i, traps[i].corners, traps[i].weight) for i in chain])

# The O(z^2) longest path over the "strictly left of" order agrees.
print("DAG longest path  :", dag_longest_path(coll))

# The same comparison on a few hundred random collections.
rng = random.Random(0)
for _ in range(300):
    n = rng.randint(1, 12)
    rand = []
    for _ in range(rng.randint(0, 25)):
        la, lb = rng.randint(1, n), rng.randint(1, n)
        rand.append(Trapezoid(la, rng.randint(la, n), lb, rng.randint(lb, n), rng.randint(1, 9)))
    c = TrapCollection(n, n, tuple(rand))
    assert select_trape(c).omega_star == dag_longest_path(c)[0]
print("sweep == DAG on 300 random collections")
