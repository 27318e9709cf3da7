"""Test-side exhaustive enumerators, independent of the solver code paths."""

from itertools import combinations

from cpematch.model import crosses


def cross_graph(edge_ids, inst):
    adj = {e: set() for e in edge_ids}
    for e, f in combinations(sorted(edge_ids), 2):
        if crosses(inst.edges[e], inst.edges[f]):
            adj[e].add(f)
            adj[f].add(e)
    return adj


def is_plain_matching(edge_ids, inst):
    a = [inst.edges[e].a for e in edge_ids]
    b = [inst.edges[e].b for e in edge_ids]
    return len(set(a)) == len(a) and len(set(b)) == len(b)


def feasible(edge_ids, inst, c):
    if not is_plain_matching(edge_ids, inst):
        return False
    adj = cross_graph(edge_ids, inst)
    for e, nbrs in adj.items():
        if len(nbrs) > c:
            return False
        for f in nbrs:
            if (min(e, f), max(e, f)) not in inst.admissible:
                return False
    return True


def all_feasible(inst, c, max_size=None):
    m = inst.m
    top = m if max_size is None else min(m, max_size)
    for size in range(top + 1):
        for subset in combinations(range(m), size):
            if feasible(subset, inst, c):
                yield subset


def components(edge_ids, inst):
    adj = cross_graph(edge_ids, inst)
    seen, comps = set(), []
    for e in sorted(edge_ids):
        if e in seen:
            continue
        stack, comp = [e], set()
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adj[x] - comp)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def shape(edge_ids, inst):
    """'point', 'path', 'cycle' or 'other' for a connected crossing graph."""
    adj = cross_graph(edge_ids, inst)
    if len(components(edge_ids, inst)) != 1:
        return "other"
    degrees = sorted(len(v) for v in adj.values())
    if len(degrees) == 1:
        return "point"
    if degrees[-1] > 2:
        return "other"
    if degrees.count(1) == 2:
        return "path"
    if all(d == 2 for d in degrees):
        return "cycle"
    return "other"


def path_sequence(edge_ids, inst):
    """Edges of a path-shaped matching in path order, starting at the upper-left end."""
    adj = cross_graph(edge_ids, inst)
    ends = [e for e, v in adj.items() if len(v) == 1]
    start = min(ends, key=lambda e: inst.edges[e].a)
    seq, prev = [start], None
    while len(seq) < len(edge_ids):
        cur = seq[-1]
        nxt = next(f for f in adj[cur] if f != prev)
        prev = cur
        seq.append(nxt)
    return seq


def end_pairs(edge_ids, inst):
    seq = path_sequence(edge_ids, inst)
    x = tuple(sorted(seq[:2]))
    y = tuple(sorted(seq[-2:]))
    return x, y


def best_paths_by_enumeration(inst, max_size=None):
    """(X, Y) -> max weight over all 2-CPE path-shaped matchings with those end pairs."""
    best = {}
    for subset in all_feasible(inst, 2, max_size):
        if len(subset) >= 2 and shape(subset, inst) == "path":
            key = end_pairs(subset, inst)
            w = inst.weight_of(subset)
            if w > best.get(key, 0):
                best[key] = w
    return best


def cycles_by_enumeration(inst):
    out = set()
    for size in (3, 4, 5, 6):
        for subset in combinations(range(inst.m), size):
            if feasible(subset, inst, 2) and shape(subset, inst) == "cycle":
                out.add(frozenset(subset))
    return out
