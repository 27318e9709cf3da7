"""Cross-checking the fast solver against two slow reference solvers.

``brute_force`` tries every edge subset.  ``fpt_2k`` tries every subset of
admissible pairs and fills the rest with a crossing-free matching.  Both are
exponential and only meant for small instances.
"""

import time

from cpematch import brute_force, fpt_2k, solve
from cpematch.generate import generate

disagreements = 0
start = time.perf_counter()
for seed in range(200):
    inst = generate(6, 6, 12, 8, c=seed % 3, seed=seed, precision=0)
    fast = solve(inst).weight
    slow = brute_force(inst).weight
    fpt = fpt_2k(inst).weight
    disagreements += not (fast == slow == fpt)
print(f"200 instances, {disagreements} disagreements, {time.perf_counter() - start:.2f}s")

# The fast solver scales to sizes the references cannot touch.
big = generate(1000, 1000, 2000, 1000, c=2, seed=1)
start = time.perf_counter()
sol = solve(big)
print(f"m={big.m}, k={big.k}, c=2: weight {big.to_decimal(sol.weight)}, "
      f"{len(sol.matching)} edges, {time.perf_counter() - start:.2f}s")
