"""Matchings whose edges may cross a limited number of times.

Edges join an upper row a_1..a_nA to a lower row b_1..b_nB.  Two edges cross
when their endpoints are in opposite order on the two rows.  A crossing is
only allowed if the pair is listed as admissible, and each matched edge may
take part in at most ``c`` crossings.
"""

from cpematch import Instance, solve

# e1=(a1,b1) and e2=(a2,b2) run parallel; e3=(a1,b2) and e4=(a2,b1) cross.
inst = Instance.build(2, 2, [(1, 1, 5), (2, 2, 5), (1, 2, 6), (2, 1, 6)],
                      admissible=[(2, 3)], c=1)      # 0-based edge ids 2 and 3

for c in (0, 1):
    sol = solve(inst, c=c)
    print(f"c={c}: weight {inst.to_decimal(sol.weight)} using edges "
          f"{sorted(e + 1 for e in sol.matching)}, "
          f"crossings {sorted((e + 1, f + 1) for e, f in sol.realized_crossings)}")

# Three mutually crossing edges form a triangle in the crossing graph, which
# needs c=2: every edge crosses the other two.
tri = Instance.build(3, 3, [(1, 3, 1), (2, 2, 1), (3, 1, 1)],
                     admissible=[(0, 1), (0, 2), (1, 2)], c=2)
for c in (0, 1, 2):
    print(f"triangle, c={c}: weight {tri.to_decimal(solve(tri, c=c).weight)}")

# A zig-zag of eight edges where consecutive edges cross.  With c=2 the whole
# zig-zag is one connected piece of the matching.
coords = [(1, 2), (3, 1), (2, 4), (5, 3), (4, 6), (7, 5), (6, 8), (8, 7)]
zig = Instance.build(8, 8, [(a, b, 1) for a, b in coords],
                     admissible=[(i, i + 1) for i in range(7)], c=2)
for c in (0, 1, 2):
    sol = solve(zig, c=c)
    print(f"zig-zag, c={c}: {len(sol.matching)} edges, {len(sol.realized_crossings)} crossings")
