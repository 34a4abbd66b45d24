"""Pure-Python enumeration kernel (reference and fallback for ``_enum``).

Edges are colored in id order with colors tried in increasing order, so
solutions come out lexicographically. Pruning at every step:

* adjacent edges get distinct colors;
* the colors still unused must fit into the edges still uncolored;
* for ``INTERVAL`` / ``CYCLIC`` the partial star at each endpoint must
  still fit in an interval / cyclic arc of length equal to the degree.

A complete assignment that survived pruning is therefore a valid coloring.
"""

from __future__ import annotations

from typing import Iterator, Sequence

PROPER, INTERVAL, CYCLIC = 0, 1, 2


def min_arc(mask: int, t: int) -> int:
    """Length of the shortest cyclic arc of ``[1, t]`` covering ``mask`` (nonzero)."""
    gap = best = 0
    # two laps so a zero-run wrapping past color t is measured whole
    for i in range(2 * t):
        if mask >> (i % t) & 1:
            gap = 0
        else:
            gap += 1
            if gap > best:
                best = gap
    return t - min(best, t)


def _fits(mask: int, d: int, t: int, kind: int) -> bool:
    if kind == INTERVAL:
        lo = (mask & -mask).bit_length()
        return mask.bit_length() - lo + 1 <= d
    if kind == CYCLIC:
        return d >= t or min_arc(mask, t) <= d
    return True


def iter_colorings(
    n: int, eu: Sequence[int], ev: Sequence[int], t: int, kind: int
) -> Iterator[tuple[int, ...]]:
    m = len(eu)
    if m == 0 or t < 1 or t > m:
        return
    deg = [0] * n
    for u, v in zip(eu, ev):
        deg[u] += 1
        deg[v] += 1
    if max(deg) > t:
        return
    star = [0] * n
    uses = [0] * (t + 1)
    color = [0] * m
    distinct = 0
    i = 0
    while i >= 0:
        if i == m:
            if distinct == t:
                yield tuple(color)
            i -= 1
            continue
        u, v = eu[i], ev[i]
        c = color[i]
        if c:
            bit = 1 << (c - 1)
            star[u] ^= bit
            star[v] ^= bit
            uses[c] -= 1
            if uses[c] == 0:
                distinct -= 1
        remaining = m - i - 1
        blocked = star[u] | star[v]
        c += 1
        while c <= t:
            bit = 1 << (c - 1)
            if not blocked & bit:
                nd = distinct + (uses[c] == 0)
                if t - nd <= remaining and (
                    kind == PROPER
                    or (_fits(star[u] | bit, deg[u], t, kind) and _fits(star[v] | bit, deg[v], t, kind))
                ):
                    break
            c += 1
        if c > t:
            color[i] = 0
            i -= 1
            continue
        color[i] = c
        star[u] |= bit
        star[v] |= bit
        if uses[c] == 0:
            distinct += 1
        uses[c] += 1
        i += 1


def count_colorings(n: int, eu: Sequence[int], ev: Sequence[int], t: int, kind: int) -> int:
    return sum(1 for _ in iter_colorings(n, eu, ev, t, kind))


def collect_colorings(
    n: int, eu: Sequence[int], ev: Sequence[int], t: int, kind: int
) -> list[tuple[int, ...]]:
    return list(iter_colorings(n, eu, ev, t, kind))
