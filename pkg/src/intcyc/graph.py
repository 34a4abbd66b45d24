"""Simple connected graphs, tree recognition and tree-path machinery.

Vertices are ``0..n-1``. Edge identity is the position in the load-order
edge list, and every coloring in this package is indexed by that id.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable


class GraphError(ValueError):
    """Raised for malformed, non-simple or disconnected graph input."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        seen: set[frozenset[int]] = set()
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {i} ({u}, {v}) has a vertex outside 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"edge {i} is a loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f"edge {i} ({u}, {v}) duplicates an earlier edge")
            seen.add(key)
        if not self._connected():
            raise GraphError("graph is disconnected")

    def _connected(self) -> bool:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        return all(seen)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _stars(self) -> tuple[tuple[int, ...], ...]:
        stars: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            stars[u].append(i)
            stars[v].append(i)
        return tuple(tuple(s) for s in stars)

    @cached_property
    def _adj(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(self.other_end(e, x) for e in star) for x, star in enumerate(self._stars)
        )

    def _check_vertex(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise IndexError(f"vertex {x} out of range 0..{self.n - 1}")

    def other_end(self, e: int, x: int) -> int:
        u, v = self.edges[e]
        return v if u == x else u

    def star(self, x: int) -> tuple[int, ...]:
        """Edge ids incident to ``x`` in increasing order."""
        self._check_vertex(x)
        return self._stars[x]

    def adjacency(self, x: int) -> tuple[int, ...]:
        self._check_vertex(x)
        return self._adj[x]

    def degrees(self) -> list[int]:
        return [len(s) for s in self._stars]


def incident_edges(g: Graph, x: int) -> frozenset[int]:
    return frozenset(g.star(x))


def neighbors(g: Graph, x: int) -> frozenset[int]:
    return frozenset(g.adjacency(x))


def degree(g: Graph, x: int) -> int:
    return len(g.star(x))


def is_tree(g: Graph) -> bool:
    # connectivity is a Graph invariant
    return g.m == g.n - 1


def _bfs(g: Graph, sources: Iterable[int]) -> list[int]:
    dist = [-1] * g.n
    queue = deque()
    for s in sources:
        g._check_vertex(s)
        if dist[s] != 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        x = queue.popleft()
        for y in g.adjacency(x):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: Graph, x: int, y: int) -> int:
    g._check_vertex(y)
    return _bfs(g, [x])[y]


def distance_to_set(g: Graph, x: int, s: Iterable[int]) -> int:
    """Minimum distance from ``x`` to a vertex of the nonempty set ``s``."""
    s = list(s)
    if not s:
        raise ValueError("distance to an empty vertex set is undefined")
    g._check_vertex(x)
    # multi-source BFS from s, read off at x
    return _bfs(g, s)[x]


@dataclass(frozen=True)
class PathData:
    """A simple path and its derived vertex and edge sets.

    ``tp`` is the union of the full stars of the internal vertices, or the
    path's own edges when there is no internal vertex.
    """

    endpoints: tuple[int, int]
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    internal: frozenset[int] = field(repr=False)
    tilde_vertices: frozenset[int] = field(repr=False)
    tp: frozenset[int] = field(repr=False)

    @property
    def k(self) -> int:
        return len(self.edges)


def _path_data(g: Graph, vertices: list[int], edges: list[int]) -> PathData:
    internal = frozenset(vertices[1:-1])
    tilde = set(vertices)
    tp: set[int] = set()
    for x in internal:
        tilde.update(g.adjacency(x))
        tp.update(g.star(x))
    if not internal:
        tp = set(edges)
    return PathData(
        endpoints=(vertices[0], vertices[-1]),
        vertices=tuple(vertices),
        edges=tuple(edges),
        internal=internal,
        tilde_vertices=frozenset(tilde),
        tp=frozenset(tp),
    )


def path_from_vertices(g: Graph, vertices: Iterable[int]) -> PathData:
    """PathData for an explicit simple path of any graph (e.g. an arc of a cycle)."""
    vertices = list(vertices)
    if not vertices:
        raise GraphError("a path needs at least one vertex")
    if len(set(vertices)) != len(vertices):
        raise GraphError("path repeats a vertex")
    edge_id = {frozenset(e): i for i, e in enumerate(g.edges)}
    edges = []
    for x, y in zip(vertices, vertices[1:]):
        g._check_vertex(x)
        g._check_vertex(y)
        e = edge_id.get(frozenset((x, y)))
        if e is None:
            raise GraphError(f"vertices {x} and {y} are not adjacent")
        edges.append(e)
    g._check_vertex(vertices[-1])
    return _path_data(g, vertices, edges)


def tree_path(h: Graph, b_i: int, b_j: int) -> PathData:
    if not is_tree(h):
        raise GraphError("tree_path requires a tree")
    h._check_vertex(b_i)
    h._check_vertex(b_j)
    # parent pointers from b_j, then walk up from b_i
    parent_edge = [-1] * h.n
    seen = [False] * h.n
    seen[b_j] = True
    stack = [b_j]
    while stack:
        x = stack.pop()
        for e in h.star(x):
            y = h.other_end(e, x)
            if not seen[y]:
                seen[y] = True
                parent_edge[y] = e
                stack.append(y)
    vertices = [b_i]
    edges = []
    x = b_i
    while x != b_j:
        e = parent_edge[x]
        edges.append(e)
        x = h.other_end(e, x)
        vertices.append(x)
    return _path_data(h, vertices, edges)


# -- serialization ---------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex index")
        pairs.append((u, v))
    if not pairs:
        raise GraphError("edge list is empty")
    n = max(max(p) for p in pairs) + 1
    return Graph(n, tuple(pairs))


def parse_graph_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "edges" not in data:
        raise GraphError("graph JSON must be an object with an 'edges' list")
    edges = data["edges"]
    if not isinstance(edges, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(type(v) is int for v in p) for p in edges
    ):
        raise GraphError("'edges' must be a list of [u, v] integer pairs")
    if "n" in data:
        n = data["n"]
        if type(n) is not int:
            raise GraphError("'n' must be an integer")
    elif edges:
        n = max(max(p) for p in edges) + 1
    else:
        n = 1
    return Graph(n, tuple(tuple(p) for p in edges))


def load_graph(source: str) -> Graph:
    """Parse graph JSON or a whitespace edge list, whichever ``source`` holds."""
    if source.lstrip().startswith("{"):
        return parse_graph_json(source)
    return parse_edge_list(source)


def dump_graph_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]})


def dump_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)
