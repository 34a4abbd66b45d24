"""Exhaustive enumeration of edge colorings and checks of the path lemmas.

Everything here is brute force over small graphs: the exact spectra it
computes are the ground truth the closed-form tree results are tested
against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import backend
from ._enum_py import CYCLIC, INTERVAL, PROPER
from .cyclic import intcyc_open_1, intcyc_open_2, mask_is_cyclic_interval
from .graph import Graph, PathData, is_tree, path_from_vertices, tree_path
from .invariants import IntSet, SpectrumReport, big_m, max_degree
from .verify import Coloring, is_cyclic_coloring

DEFAULT_LIMIT_EDGES = 10
KINDS = {"proper": PROPER, "interval": INTERVAL, "cyclic": CYCLIC}


class SizeLimitError(ValueError):
    """Raised when a graph is too large for exhaustive enumeration."""


class PreconditionError(ValueError):
    """Raised when a lemma check gets input outside the lemma's hypotheses."""


def _guard(g: Graph, limit_edges: int) -> None:
    if g.m > limit_edges:
        raise SizeLimitError(f"graph has {g.m} edges, enumeration limit is {limit_edges}")


def _kind(kind: str) -> int:
    try:
        return KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown coloring kind {kind!r}; expected one of {sorted(KINDS)}") from None


def _endpoints(g: Graph) -> tuple[list[int], list[int]]:
    return [u for u, _ in g.edges], [v for _, v in g.edges]


def enumerate_colorings(
    g: Graph, t: int, kind: str = "proper", *, limit_edges: int = DEFAULT_LIMIT_EDGES
) -> Iterator[Coloring]:
    """Yield every ``kind`` t-coloring of ``g`` in lexicographic order of color vectors."""
    _guard(g, limit_edges)
    code = _kind(kind)
    eu, ev = _endpoints(g)
    if backend.NAME == "compiled":
        rows: Iterable[tuple[int, ...]] = backend.kernel.collect_colorings(g.n, eu, ev, t, code)
    else:
        rows = backend.kernel.iter_colorings(g.n, eu, ev, t, code)
    for row in rows:
        yield Coloring(t, row)


def count_colorings(g: Graph, t: int, kind: str = "proper", *, limit_edges: int = DEFAULT_LIMIT_EDGES) -> int:
    _guard(g, limit_edges)
    eu, ev = _endpoints(g)
    return backend.kernel.count_colorings(g.n, eu, ev, t, _kind(kind))


@dataclass(frozen=True)
class OracleResult:
    graph_id: str
    t_max: int
    counts: dict[int, tuple[int, int, int]] = field(repr=False)

    @property
    def theta_exact(self) -> IntSet:
        return IntSet(t for t, (_, i, _) in self.counts.items() if i > 0)

    @property
    def theta_cyc_exact(self) -> IntSet:
        return IntSet(t for t, (_, _, c) in self.counts.items() if c > 0)

    @property
    def proper_exact(self) -> IntSet:
        return IntSet(t for t, (p, _, _) in self.counts.items() if p > 0)

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "t_max": self.t_max,
            "counts": {
                str(t): {"proper": p, "interval": i, "cyclic": c} for t, (p, i, c) in sorted(self.counts.items())
            },
            "theta_exact": list(self.theta_exact),
            "theta_cyc_exact": list(self.theta_cyc_exact),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def exact_spectrum(
    g: Graph,
    t_max: int | None = None,
    *,
    graph_id: str = "",
    limit_edges: int = DEFAULT_LIMIT_EDGES,
) -> OracleResult:
    """Counts of proper, interval and cyclic t-colorings for ``t`` in ``[1, t_max]``.

    A proper t-coloring uses all t colors, so ``t_max = |E|`` (the default)
    makes θ and Θ complete.
    """
    _guard(g, limit_edges)
    if t_max is None:
        t_max = g.m
    eu, ev = _endpoints(g)
    k = backend.kernel
    counts = {}
    for t in range(1, t_max + 1):
        counts[t] = (
            k.count_colorings(g.n, eu, ev, t, PROPER),
            k.count_colorings(g.n, eu, ev, t, INTERVAL),
            k.count_colorings(g.n, eu, ev, t, CYCLIC),
        )
    return OracleResult(graph_id or f"n{g.n}m{g.m}", t_max, counts)


def oracle_report(g: Graph, *, limit_edges: int = DEFAULT_LIMIT_EDGES) -> SpectrumReport:
    """SpectrumReport whose spectra come from exhaustive enumeration."""
    res = exact_spectrum(g, limit_edges=limit_edges)
    theta, theta_cyc, proper = res.theta_exact, res.theta_cyc_exact, res.proper_exact
    tree = is_tree(g) and g.m > 0
    return SpectrumReport(
        provenance="oracle",
        n_edges=g.m,
        delta=max_degree(g),
        chi_prime=proper[0] if proper else None,
        m_of_h=big_m(g) if tree else None,
        theta=theta or None,
        theta_cyc=theta_cyc or None,
        w_int=theta[0] if theta else None,
        W_int=theta[-1] if theta else None,
        w_cyc=theta_cyc[0] if theta_cyc else None,
        W_cyc=theta_cyc[-1] if theta_cyc else None,
    )


# -- lemma checks ------------------------------------------------------------


def _edge_bits(c: Coloring) -> list[int]:
    return [1 << (col - 1) for col in c.colors]


def _union(bits: Sequence[int], edges: Iterable[int]) -> int:
    mask = 0
    for e in edges:
        mask |= bits[e]
    return mask


def _require(g: Graph, c: Coloring, path: PathData | None = None) -> None:
    if not is_cyclic_coloring(g, c):
        raise PreconditionError("coloring is not a cyclically-interval coloring")
    if path is not None and path.k < 2:
        raise PreconditionError(f"path must have at least 2 edges, has {path.k}")


def _inner_union(g: Graph, bits: Sequence[int], path: PathData) -> int:
    mask = 0
    for x in path.vertices[1:-1]:
        mask |= _union(bits, g.star(x))
    return mask


def _lemma2(g: Graph, bits: Sequence[int], t: int, path: PathData) -> bool:
    return mask_is_cyclic_interval(_inner_union(g, bits, path), t)


def _lemma3(g: Graph, colors: Sequence[int], bits: Sequence[int], t: int, path: PathData) -> bool:
    inner = _inner_union(g, bits, path)
    a, b = colors[path.edges[0]], colors[path.edges[-1]]
    return not intcyc_open_1(a, b, t).mask & ~inner or not intcyc_open_2(a, b, t).mask & ~inner


def check_lemma2(g: Graph, c: Coloring, path: PathData) -> bool:
    """Colors on the stars of a path's internal vertices form a t-cyclic interval."""
    _require(g, c, path)
    return _lemma2(g, _edge_bits(c), c.t, path)


def check_lemma3(g: Graph, c: Coloring, path: PathData) -> bool:
    """One of the two open cyclic intervals between the end-edge colors is covered
    by the colors on the internal stars."""
    _require(g, c, path)
    return _lemma3(g, c.colors, _edge_bits(c), c.t, path)


def _all_tp(h: Graph) -> list[frozenset[int]]:
    return [tree_path(h, i, j).tp for i in range(h.n) for j in range(i + 1, h.n)]


def check_lemma4(h: Graph, c: Coloring) -> bool:
    """Some TP set of the tree carries every color of ``[1, t]``."""
    if not is_tree(h):
        raise PreconditionError("lemma 4 is stated for trees")
    _require(h, c)
    bits = _edge_bits(c)
    full = (1 << c.t) - 1
    return any(_union(bits, tp) == full for tp in _all_tp(h))


def check_corollary_bound(h: Graph, c: Coloring) -> bool:
    """Some TP set of the tree has at least ``t`` edges."""
    if not is_tree(h):
        raise PreconditionError("the TP bound is stated for trees")
    _require(h, c)
    return any(len(tp) >= c.t for tp in _all_tp(h))


# -- sweeps ------------------------------------------------------------------


def tree_paths(h: Graph, min_edges: int = 2) -> list[PathData]:
    """Paths between all unordered vertex pairs of a tree with at least ``min_edges`` edges."""
    out = []
    for i in range(h.n):
        for j in range(i + 1, h.n):
            p = tree_path(h, i, j)
            if p.k >= min_edges:
                out.append(p)
    return out


def cycle_paths(g: Graph, min_edges: int = 2) -> list[PathData]:
    """Every simple path with at least ``min_edges`` edges in a 2-regular graph,
    in both directions of travel."""
    if any(d != 2 for d in g.degrees()):
        raise ValueError("cycle_paths needs a cycle")
    order = [0]
    prev = -1
    while len(order) < g.n:
        x = order[-1]
        nxt = next(y for y in sorted(g.adjacency(x)) if y != prev)
        prev = x
        order.append(nxt)
    out = []
    for direction in (order, order[::-1]):
        for start in range(g.n):
            for k in range(min_edges, g.n):
                out.append(path_from_vertices(g, [direction[(start + s) % g.n] for s in range(k + 1)]))
    return out


@dataclass
class SweepReport:
    graphs: int = 0
    colorings: int = 0
    path_checks: int = 0
    lemma2_failures: int = 0
    lemma3_failures: int = 0
    lemma4_failures: int = 0
    bound_failures: int = 0
    counterexamples: list = field(default_factory=list, repr=False)

    @property
    def failures(self) -> int:
        return self.lemma2_failures + self.lemma3_failures + self.lemma4_failures + self.bound_failures


def sweep(
    g: Graph,
    paths: Sequence[PathData],
    *,
    t_values: Iterable[int] | None = None,
    report: SweepReport | None = None,
    limit_edges: int = DEFAULT_LIMIT_EDGES,
) -> SweepReport:
    """Run the lemma checks on every cyclically-interval coloring of ``g``.

    Lemmas 2 and 3 run on every path in ``paths``; on trees the Lemma 4
    coverage and the ``|TP| >= t`` bound run once per coloring.
    """
    report = report or SweepReport()
    report.graphs += 1
    tree = is_tree(g)
    tps = _all_tp(g) if tree else []
    for t in t_values if t_values is not None else range(1, g.m + 1):
        full = (1 << t) - 1
        bound_ok = any(len(tp) >= t for tp in tps)
        for c in enumerate_colorings(g, t, "cyclic", limit_edges=limit_edges):
            report.colorings += 1
            bits = _edge_bits(c)
            for p in paths:
                report.path_checks += 1
                if not _lemma2(g, bits, t, p):
                    report.lemma2_failures += 1
                    report.counterexamples.append(("lemma2", c, p))
                if not _lemma3(g, c.colors, bits, t, p):
                    report.lemma3_failures += 1
                    report.counterexamples.append(("lemma3", c, p))
            if tree:
                if not any(_union(bits, tp) == full for tp in tps):
                    report.lemma4_failures += 1
                    report.counterexamples.append(("lemma4", c, None))
                if not bound_ok:
                    report.bound_failures += 1
                    report.counterexamples.append(("bound", c, None))
    return report
