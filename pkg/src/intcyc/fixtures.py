"""Named fixture graphs: paths, stars, the leg-2 spider, cycles, K_{a,b}.

``python -m intcyc.fixtures DIR`` writes every fixture as ``DIR/<name>.json``.
"""

from __future__ import annotations

import sys
from pathlib import Path

from .graph import Graph, dump_graph_json


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def spider(legs: int = 3, length: int = 2) -> Graph:
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, tuple(edges))


def cycle(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def fixture_library() -> dict[str, Graph]:
    lib: dict[str, Graph] = {}
    for n in range(2, 9):
        lib[f"path-{n}"] = path(n)
    for k in range(2, 6):
        lib[f"star-{k}"] = star(k)
    lib["spider-3-2"] = spider(3, 2)
    for n in range(3, 9):
        lib[f"cycle-{n}"] = cycle(n)
    lib["k-2-2"] = complete_bipartite(2, 2)
    lib["k-3-2"] = complete_bipartite(3, 2)
    return lib


def write_fixtures(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, g in fixture_library().items():
        target = directory / f"{name}.json"
        target.write_text(dump_graph_json(g) + "\n")
        written.append(target)
    return written


if __name__ == "__main__":
    for p in write_fixtures(sys.argv[1] if len(sys.argv) > 1 else "fixtures"):
        print(p)
