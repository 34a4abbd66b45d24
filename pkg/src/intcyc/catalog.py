"""Small-tree catalog: Prüfer decoding, canonical forms, isomorph-free lists."""

from __future__ import annotations

import heapq
import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from .graph import Graph


def prufer_decode(seq: Sequence[int], n: int | None = None) -> list[tuple[int, int]]:
    """Edges of the labeled tree on ``len(seq) + 2`` vertices coded by ``seq``."""
    if n is None:
        n = len(seq) + 2
    if len(seq) != n - 2:
        raise ValueError(f"Prüfer sequence for {n} vertices must have length {n - 2}")
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise ValueError(f"label {x} outside 0..{n - 1}")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def prufer_encode(n: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    leaves = [v for v in range(n) if len(adj[v]) == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (x,) = adj[leaf]
        seq.append(x)
        adj[x].discard(leaf)
        if len(adj[x]) == 1:
            heapq.heappush(leaves, x)
    return seq


def _adjacency(n: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for leaf in layer:
            for y in adj[leaf]:
                deg[y] -= 1
                if deg[y] == 1:
                    nxt.append(y)
        layer = nxt
    return sorted(layer)


def _code(adj: list[list[int]], root: int) -> str:
    def rec(x: int, parent: int) -> str:
        return "(" + "".join(sorted(rec(y, x) for y in adj[x] if y != parent)) + ")"

    return rec(root, -1)


def canonical_form(n: int, edges: Sequence[tuple[int, int]]) -> str:
    """Isomorphism-invariant string for a tree (AHU code rooted at a center)."""
    adj = _adjacency(n, edges)
    return min(_code(adj, c) for c in _centers(adj))


def canonical_tree(n: int, edges: Sequence[tuple[int, int]]) -> Graph:
    """Representative labeling: BFS from the minimal-code center, children by code."""
    adj = _adjacency(n, edges)
    root = min(_centers(adj), key=lambda c: _code(adj, c))

    codes: dict[tuple[int, int], str] = {}

    def code(x: int, parent: int) -> str:
        key = (x, parent)
        if key not in codes:
            codes[key] = "(" + "".join(sorted(code(y, x) for y in adj[x] if y != parent)) + ")"
        return codes[key]

    code(root, -1)
    label = {root: 0}
    out = []
    queue = [(root, -1)]
    for x, parent in queue:
        for y in sorted((y for y in adj[x] if y != parent), key=lambda y: code(y, x)):
            label[y] = len(label)
            out.append((label[x], label[y]))
            queue.append((y, x))
    return Graph(n, tuple(out))


def labeled_trees(n: int) -> Iterator[list[tuple[int, int]]]:
    """Every labeled tree on ``n`` vertices, via all Prüfer sequences."""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def trees_by_prufer(n: int) -> list[Graph]:
    """Isomorph-free trees on ``n`` vertices: all Prüfer sequences, deduplicated."""
    seen: dict[str, Graph] = {}
    for edges in labeled_trees(n):
        key = canonical_form(n, edges)
        if key not in seen:
            seen[key] = canonical_tree(n, edges)
    return sorted(seen.values(), key=lambda g: canonical_form(g.n, g.edges))


@lru_cache(maxsize=None)
def _trees_by_growth(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ()),)
    seen: dict[str, Graph] = {}
    for small in _trees_by_growth(n - 1):
        for x in range(n - 1):
            edges = small.edges + ((x, n - 1),)
            key = canonical_form(n, edges)
            if key not in seen:
                seen[key] = canonical_tree(n, edges)
    return tuple(sorted(seen.values(), key=lambda g: canonical_form(g.n, g.edges)))


def trees(n: int) -> list[Graph]:
    """Isomorph-free trees on ``n`` vertices, in canonical-form order.

    Built by attaching a leaf to every vertex of every tree on ``n - 1``
    vertices; :func:`trees_by_prufer` yields the same list.
    """
    if n < 1:
        raise ValueError("trees need at least one vertex")
    return list(_trees_by_growth(n))


def tree_catalog(max_edges: int) -> list[Graph]:
    """All trees with between 1 and ``max_edges`` edges, smallest first."""
    return [g for m in range(1, max_edges + 1) for g in trees(m + 1)]
