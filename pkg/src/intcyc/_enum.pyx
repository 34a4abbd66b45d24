# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; same contract as ``_enum_py``."""

from libc.stdlib cimport malloc, calloc, free

ctypedef unsigned long long u64

cdef enum:
    PROPER = 0
    INTERVAL = 1
    CYCLIC = 2


cdef inline int _low(u64 x) nogil:
    # index (0-based) of the lowest set bit
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


cdef inline int _high(u64 x) nogil:
    cdef int i = -1
    while x:
        x >>= 1
        i += 1
    return i


cdef inline int _min_arc(u64 mask, int t) nogil:
    cdef int i, gap = 0, best = 0
    for i in range(2 * t):
        if (mask >> (i % t)) & 1:
            gap = 0
        else:
            gap += 1
            if gap > best:
                best = gap
    if best > t:
        best = t
    return t - best


cdef inline bint _fits(u64 mask, int d, int t, int kind) nogil:
    if kind == INTERVAL:
        return _high(mask) - _low(mask) + 1 <= d
    if kind == CYCLIC:
        return d >= t or _min_arc(mask, t) <= d
    return True


def _run(int n, eu, ev, int t, int kind, bint collect):
    cdef int m = len(eu)
    if m == 0 or t < 1 or t > m:
        return 0, []
    if m > 64 or t > 64:
        raise ValueError("compiled kernel supports at most 64 edges and 64 colors")
    cdef int *U = <int *> malloc(m * sizeof(int))
    cdef int *V = <int *> malloc(m * sizeof(int))
    cdef int *color = <int *> calloc(m, sizeof(int))
    cdef int *deg = <int *> calloc(n, sizeof(int))
    cdef u64 *star = <u64 *> calloc(n, sizeof(u64))
    cdef int *uses = <int *> calloc(t + 1, sizeof(int))
    cdef long long count = 0
    cdef int i, j, c, u, v, nd, remaining, distinct = 0, maxdeg = 0
    cdef u64 bit = 0, blocked
    out = []
    try:
        for i in range(m):
            U[i] = eu[i]
            V[i] = ev[i]
            deg[U[i]] += 1
            deg[V[i]] += 1
        for i in range(n):
            if deg[i] > maxdeg:
                maxdeg = deg[i]
        if maxdeg > t:
            return 0, out
        i = 0
        while i >= 0:
            if i == m:
                if distinct == t:
                    count += 1
                    if collect:
                        out.append(tuple([color[j] for j in range(m)]))
                i -= 1
                continue
            u = U[i]
            v = V[i]
            c = color[i]
            if c:
                bit = (<u64> 1) << (c - 1)
                star[u] ^= bit
                star[v] ^= bit
                uses[c] -= 1
                if uses[c] == 0:
                    distinct -= 1
            remaining = m - i - 1
            blocked = star[u] | star[v]
            c += 1
            while c <= t:
                bit = (<u64> 1) << (c - 1)
                if not (blocked & bit):
                    nd = distinct + (1 if uses[c] == 0 else 0)
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
    finally:
        free(U)
        free(V)
        free(color)
        free(deg)
        free(star)
        free(uses)
    return count, out


def count_colorings(int n, eu, ev, int t, int kind):
    return _run(n, eu, ev, t, kind, False)[0]


def collect_colorings(int n, eu, ev, int t, int kind):
    return _run(n, eu, ev, t, kind, True)[1]
