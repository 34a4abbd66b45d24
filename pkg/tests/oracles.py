"""Independent brute-force references used only by the tests.

Nothing here shares code with the package's fast paths: sets instead of
bitmasks, itertools.product instead of pruned backtracking.
"""

from __future__ import annotations

import itertools


def cyc_closed_sets(t: int) -> set[frozenset[int]]:
    """Every set intcyc_j[(i1, i2), t] straight from the set definitions."""
    palette = set(range(1, t + 1))
    out = set()
    for i1 in range(1, t + 1):
        for i2 in range(1, t + 1):
            closed1 = set(range(min(i1, i2), max(i1, i2) + 1))
            open1 = closed1 - {i1, i2}
            out.add(frozenset(closed1))
            out.add(frozenset(palette - open1))
    return out


def is_cyclic_by_witness(members: set[int], t: int) -> bool:
    return bool(members) and frozenset(members) in cyc_closed_sets(t)


def is_run(members: set[int]) -> bool:
    return bool(members) and max(members) - min(members) + 1 == len(members)


def brute_colorings(n: int, edges, t: int, kind: str):
    """All color vectors in [1,t]^m of the requested kind, by plain product."""
    stars = [[e for e, uv in enumerate(edges) if x in uv] for x in range(n)]
    for colors in itertools.product(range(1, t + 1), repeat=len(edges)):
        if set(colors) != set(range(1, t + 1)):
            continue
        ok = True
        for star in stars:
            seen = {colors[e] for e in star}
            if len(seen) != len(star):
                ok = False
                break
            if kind == "interval" and star and not is_run(seen):
                ok = False
                break
            if kind == "cyclic" and star and not is_cyclic_by_witness(seen, t):
                ok = False
                break
        if ok:
            yield colors


def acyclic_union_find(n: int, edges) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def tp_by_sets(n: int, edges, path_vertices: list[int]) -> set[int]:
    internal = path_vertices[1:-1]
    if not internal:
        return {e for e, (u, v) in enumerate(edges) if {u, v} <= set(path_vertices)}
    return {e for e, (u, v) in enumerate(edges) if u in internal or v in internal}
