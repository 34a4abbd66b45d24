"""Interval t-colorings of trees for every feasible palette size.

A tree has an interval (equivalently, cyclically-interval) t-coloring
exactly when ``Δ ≤ t ≤ M``. :func:`construct` builds one in two tiers:

1. *path spreading*: along a path whose TP set has size M, give each
   internal vertex a color block that starts where the previous one
   ended, clamped to ``[1, t]``, so the blocks sweep ``[1, t]``; every
   other vertex gets a block around its parent-edge color. Linear time.
2. *search*: depth-first backtracking with interval pruning. Only used if
   tier 1 ever produced something the verifier rejects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .graph import Graph, GraphError, is_tree, tree_path
from .invariants import big_m_witness, max_degree
from .verify import Coloring, is_interval_coloring

Mode = Literal["interval", "cyclic"]


@dataclass(frozen=True)
class ConstructionRequest:
    tree: Graph
    t: int
    mode: Mode = "interval"

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError("t must be at least 1")
        if self.mode not in ("interval", "cyclic"):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class Infeasible:
    t: int
    delta: int
    m_of_h: int
    reason: str

    @property
    def feasible_range(self) -> tuple[int, int]:
        return self.delta, self.m_of_h

    def message(self) -> str:
        return f"t={self.t} is infeasible ({self.reason}); feasible range [{self.delta},{self.m_of_h}]"


def _check_tree(h: Graph) -> None:
    if not is_tree(h):
        raise GraphError("construction needs a tree")
    if h.m == 0:
        raise GraphError("tree has no edges")


def _fill_block(h: Graph, colors: list[int], x: int, lo: int) -> None:
    """Give the uncolored edges at ``x`` the unused colors of ``[lo, lo + d - 1]``
    in edge-id order."""
    star = h.star(x)
    taken = {colors[e] for e in star if colors[e]}
    free = iter(col for col in range(lo, lo + len(star)) if col not in taken)
    for e in star:
        if not colors[e]:
            colors[e] = next(free)


def spread_along_path(h: Graph, t: int) -> Coloring:
    """Tier 1. Assumes ``Δ ≤ t ≤ M``."""
    _, (b1, b2) = big_m_witness(h)
    path = tree_path(h, b1, b2)
    colors = [0] * h.m
    colors[path.edges[0]] = 1
    for i in range(1, path.k):
        x = path.vertices[i]
        d = len(h.star(x))
        c = colors[path.edges[i - 1]]
        lo = min(c, t - d + 1)
        hi = lo + d - 1
        if i < path.k - 1:
            colors[path.edges[i]] = hi if hi != c else hi - 1
        _fill_block(h, colors, x, lo)
    # internal path vertices are complete; grow blocks outward from every path vertex
    done: set[int] = set()
    stack = list(reversed(path.vertices))
    while stack:
        x = stack.pop()
        if x in done:
            continue
        done.add(x)
        star = h.star(x)
        c = next(colors[e] for e in star if colors[e])
        _fill_block(h, colors, x, min(c, t - len(star) + 1))
        stack.extend(y for y in reversed(h.adjacency(x)) if y not in done)
    return Coloring(t, tuple(colors))


def _dfs_edge_order(h: Graph) -> list[int]:
    order, seen = [], [False] * h.n
    seen[0] = True
    stack = [0]
    while stack:
        x = stack.pop()
        kids = []
        for e in h.star(x):
            y = h.other_end(e, x)
            if not seen[y]:
                seen[y] = True
                order.append(e)
                kids.append(y)
        stack.extend(reversed(kids))
    return order


def search(h: Graph, t: int) -> Coloring | None:
    """Tier 2: exhaustive backtracking; the first interval t-coloring found, or None."""
    order = _dfs_edge_order(h)
    deg = h.degrees()
    if max(deg) > t or t > h.m:
        return None
    star_mask = [0] * h.n
    uses = [0] * (t + 1)
    colors = [0] * h.m
    m = h.m

    def fits(mask: int, d: int) -> bool:
        lo = (mask & -mask).bit_length()
        return mask.bit_length() - lo + 1 <= d

    def rec(pos: int, distinct: int) -> bool:
        if pos == m:
            return distinct == t
        e = order[pos]
        u, v = h.edges[e]
        for col in range(1, t + 1):
            bit = 1 << (col - 1)
            if (star_mask[u] | star_mask[v]) & bit:
                continue
            nd = distinct + (uses[col] == 0)
            if t - nd > m - pos - 1:
                continue
            if not (fits(star_mask[u] | bit, deg[u]) and fits(star_mask[v] | bit, deg[v])):
                continue
            colors[e] = col
            star_mask[u] |= bit
            star_mask[v] |= bit
            uses[col] += 1
            if rec(pos + 1, nd):
                return True
            uses[col] -= 1
            star_mask[u] ^= bit
            star_mask[v] ^= bit
            colors[e] = 0
        return False

    return Coloring(t, tuple(colors)) if rec(0, 0) else None


def construct(req: ConstructionRequest) -> Coloring | Infeasible:
    """An interval ``req.t``-coloring of ``req.tree`` or the reason none exists.

    For trees the cyclic mode has the same feasible range, and an interval
    coloring is already cyclically-interval, so ``mode`` does not change
    the output.
    """
    h, t = req.tree, req.t
    _check_tree(h)
    delta = max_degree(h)
    m, _ = big_m_witness(h)
    if t < delta:
        return Infeasible(t, delta, m, f"t < max degree {delta}: a star of degree {delta} needs {delta} colors")
    if t > m:
        return Infeasible(t, delta, m, f"t > M(H) = {m}: no coloring can spread over more than M colors")
    c = spread_along_path(h, t)
    if not is_interval_coloring(h, c):
        c = search(h, t)
        if c is None or not is_interval_coloring(h, c):
            raise RuntimeError(f"no interval {t}-coloring found although {delta} <= {t} <= {m}")
    return c


def construct_all_t(tree: Graph, mode: Mode = "interval") -> dict[int, Coloring]:
    _check_tree(tree)
    lo, hi = max_degree(tree), big_m_witness(tree)[0]
    out = {}
    for t in range(lo, hi + 1):
        c = construct(ConstructionRequest(tree, t, mode))
        assert isinstance(c, Coloring)
        out[t] = c
    return out
