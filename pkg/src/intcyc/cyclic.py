"""Interval and cyclic-interval algebra on subsets of the palette ``[1, t]``.

A :class:`ColorSet` stores its members as a bitmask (bit ``c - 1`` for
color ``c``). A t-cyclic interval is a nonempty arc of the color cycle
``1, 2, ..., t, 1``; the whole palette counts as one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_PALETTE = 64


@dataclass(frozen=True)
class ColorSet:
    t: int
    mask: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.t <= MAX_PALETTE:
            raise ValueError(f"palette size must lie in [1, {MAX_PALETTE}], got {self.t}")
        if self.mask < 0 or self.mask >> self.t:
            raise ValueError(f"members outside [1, {self.t}]")

    @classmethod
    def of(cls, t: int, members: Iterable[int]) -> "ColorSet":
        mask = 0
        for c in members:
            if not 1 <= c <= t:
                raise ValueError(f"color {c} outside [1, {t}]")
            mask |= 1 << (c - 1)
        return cls(t, mask)

    @classmethod
    def full(cls, t: int) -> "ColorSet":
        return cls(t, (1 << t) - 1)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(self)

    def __iter__(self) -> Iterator[int]:
        mask, c = self.mask, 1
        while mask:
            if mask & 1:
                yield c
            mask >>= 1
            c += 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, c: object) -> bool:
        return isinstance(c, int) and 1 <= c <= self.t and bool(self.mask >> (c - 1) & 1)

    def __or__(self, other: "ColorSet") -> "ColorSet":
        return ColorSet(self._same_t(other), self.mask | other.mask)

    def __and__(self, other: "ColorSet") -> "ColorSet":
        return ColorSet(self._same_t(other), self.mask & other.mask)

    def __sub__(self, other: "ColorSet") -> "ColorSet":
        return ColorSet(self._same_t(other), self.mask & ~other.mask)

    def __le__(self, other: "ColorSet") -> bool:
        self._same_t(other)
        return self.mask & ~other.mask == 0

    def complement(self) -> "ColorSet":
        return ColorSet(self.t, ((1 << self.t) - 1) & ~self.mask)

    def _same_t(self, other: "ColorSet") -> int:
        if self.t != other.t:
            raise ValueError(f"palette mismatch: {self.t} vs {other.t}")
        return self.t

    def __repr__(self) -> str:
        return f"ColorSet(t={self.t}, {{{', '.join(map(str, self))}}})"


def _check(i1: int, i2: int, t: int) -> None:
    if not (1 <= i1 <= t and 1 <= i2 <= t):
        raise ValueError(f"colors ({i1}, {i2}) must lie in [1, {t}]")


def _block(lo: int, hi: int) -> int:
    """Bitmask of the integer interval [lo, hi]."""
    return ((1 << (hi - lo + 1)) - 1) << (lo - 1)


def intcyc_closed_1(i1: int, i2: int, t: int) -> ColorSet:
    _check(i1, i2, t)
    return ColorSet(t, _block(min(i1, i2), max(i1, i2)))


def intcyc_open_1(i1: int, i2: int, t: int) -> ColorSet:
    closed = intcyc_closed_1(i1, i2, t)
    return ColorSet(t, closed.mask & ~(1 << (i1 - 1)) & ~(1 << (i2 - 1)))


def intcyc_open_2(i1: int, i2: int, t: int) -> ColorSet:
    return intcyc_closed_1(i1, i2, t).complement()


def intcyc_closed_2(i1: int, i2: int, t: int) -> ColorSet:
    return intcyc_open_1(i1, i2, t).complement()


def dif(i1: int, i2: int, t: int) -> int:
    """Cyclic distance between two colors on the palette cycle of length ``t``."""
    return min(len(intcyc_closed_1(i1, i2, t)), len(intcyc_closed_2(i1, i2, t))) - 1


def mask_is_interval(mask: int) -> bool:
    if mask == 0:
        return False
    low = mask & -mask
    return (mask + low) & mask == 0


def mask_is_cyclic_interval(mask: int, t: int) -> bool:
    full = (1 << t) - 1
    return mask != 0 and (mask == full or mask_is_interval(mask) or mask_is_interval(full & ~mask))


def is_interval(s: ColorSet) -> bool:
    return mask_is_interval(s.mask)


def is_cyclic_interval(s: ColorSet) -> bool:
    return mask_is_cyclic_interval(s.mask, s.t)


class ChainError(ValueError):
    """Raised when :func:`chained_union` gets a sequence that is not a chain."""


def chained_union(qs: Sequence[ColorSet], t: int) -> ColorSet:
    """Union of a chain of t-cyclic intervals whose neighbours overlap.

    The union of such a chain is again a t-cyclic interval; that is
    re-checked on the result rather than trusted.
    """
    if not qs:
        raise ChainError("empty chain")
    acc = 0
    for j, q in enumerate(qs):
        if q.t != t:
            raise ChainError(f"member {j} has palette {q.t}, expected {t}")
        if not is_cyclic_interval(q):
            raise ChainError(f"member {j} is not a {t}-cyclic interval: {q!r}")
        if j and not qs[j - 1].mask & q.mask:
            raise ChainError(f"members {j - 1} and {j} do not intersect")
        acc |= q.mask
    out = ColorSet(t, acc)
    assert is_cyclic_interval(out), out
    return out
