"""Graph parameters: maximum degree, chromatic index of trees, M(H) and spectra."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, is_tree


class IntSet(tuple):
    """Sorted set of positive integers; prints as ``[a,b]`` when contiguous."""

    def __new__(cls, items: Iterable[int] = ()):
        return super().__new__(cls, sorted(set(items)))

    @classmethod
    def span(cls, lo: int, hi: int) -> "IntSet":
        return cls(range(lo, hi + 1))

    @property
    def is_interval(self) -> bool:
        return bool(self) and self[-1] - self[0] + 1 == len(self)

    def __str__(self) -> str:
        if self.is_interval:
            return f"[{self[0]},{self[-1]}]"
        return "{" + ",".join(map(str, self)) + "}"

    def __repr__(self) -> str:
        return f"IntSet({str(self)})"


def max_degree(g: Graph) -> int:
    return max(g.degrees())


def _require_tree(h: Graph) -> None:
    if not is_tree(h):
        raise GraphError("graph is not a tree")
    if h.m == 0:
        raise GraphError("tree has no edges")


def chromatic_index_tree(h: Graph) -> int:
    # bipartite graphs are class 1
    _require_tree(h)
    return max_degree(h)


def tp_sizes_from(h: Graph, source: int) -> list[int]:
    """``|TP(source, j)|`` for every vertex ``j`` of the tree ``h``.

    With internal vertices x_1..x_r the stars overlap exactly in the r - 1
    inner path edges, so |TP| = sum(d(x_i)) - (r - 1); without internal
    vertices TP is the path itself.
    """
    deg = h.degrees()
    size = [0] * h.n
    internal = [0] * h.n
    degsum = [0] * h.n
    seen = [False] * h.n
    seen[source] = True
    stack = []
    for y in h.adjacency(source):
        seen[y] = True
        size[y] = 1
        stack.append(y)
    while stack:
        x = stack.pop()
        for y in h.adjacency(x):
            if seen[y]:
                continue
            seen[y] = True
            internal[y] = internal[x] + 1
            degsum[y] = degsum[x] + deg[x]
            size[y] = degsum[y] - (internal[y] - 1)
            stack.append(y)
    return size


def big_m_witness(h: Graph) -> tuple[int, tuple[int, int]]:
    """``(M(H), (b', b''))`` with the lexicographically smallest maximizing pair."""
    _require_tree(h)
    best, pair = -1, (0, 0)
    for i in range(h.n):
        sizes = tp_sizes_from(h, i)
        for j in range(i + 1, h.n):
            if sizes[j] > best:
                best, pair = sizes[j], (i, j)
    return best, pair


def big_m(h: Graph) -> int:
    return big_m_witness(h)[0]


@dataclass(frozen=True)
class SpectrumReport:
    provenance: str
    n_edges: int
    delta: int
    chi_prime: int | None = None
    m_of_h: int | None = None
    theta: IntSet | None = None
    theta_cyc: IntSet | None = None
    w_int: int | None = None
    W_int: int | None = None
    w_cyc: int | None = None
    W_cyc: int | None = None

    def chain(self) -> list[int] | None:
        """The Δ ≤ χ' ≤ w_cyc ≤ w_int ≤ W_int ≤ W_cyc ≤ |E| chain, if all present."""
        vals = [self.delta, self.chi_prime, self.w_cyc, self.w_int, self.W_int, self.W_cyc, self.n_edges]
        return None if any(v is None for v in vals) else vals

    def to_dict(self) -> dict:
        out = {}
        for key, value in self.__dict__.items():
            if value is None:
                continue
            out[key] = list(value) if isinstance(value, IntSet) else value
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def spectrum_tree(h: Graph) -> SpectrumReport:
    """Closed-form spectra of a tree: θ = Θ = [Δ, M], endpoints Δ and M."""
    _require_tree(h)
    delta = max_degree(h)
    m = big_m(h)
    span = IntSet.span(delta, m)
    return SpectrumReport(
        provenance="formula",
        n_edges=h.m,
        delta=delta,
        chi_prime=chromatic_index_tree(h),
        m_of_h=m,
        theta=span,
        theta_cyc=span,
        w_int=delta,
        W_int=m,
        w_cyc=delta,
        W_cyc=m,
    )
