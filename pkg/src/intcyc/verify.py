"""Checks for proper, interval and cyclically-interval edge t-colorings.

Colorings here are surjective by definition: a proper edge t-coloring must
use every color of ``[1, t]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .cyclic import ColorSet, mask_is_cyclic_interval, mask_is_interval
from .graph import Graph


class ColoringError(ValueError):
    """Raised for malformed coloring input or a coloring that does not fit its graph."""


@dataclass(frozen=True)
class Coloring:
    t: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.t < 1:
            raise ColoringError("palette size must be positive")
        for e, c in enumerate(self.colors):
            if not 1 <= c <= self.t:
                raise ColoringError(f"edge {e} has color {c} outside [1, {self.t}]")

    def __getitem__(self, e: int) -> int:
        return self.colors[e]

    def __len__(self) -> int:
        return len(self.colors)

    def reversed(self) -> "Coloring":
        return Coloring(self.t, tuple(self.t + 1 - c for c in self.colors))

    def rotated(self) -> "Coloring":
        return Coloring(self.t, tuple(c % self.t + 1 for c in self.colors))

    def to_json(self) -> str:
        return json.dumps({"t": self.t, "colors": list(self.colors)})

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ColoringError(f"invalid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ColoringError("coloring JSON must be an object")
        t, colors = data.get("t"), data.get("colors")
        if type(t) is not int or not isinstance(colors, list) or not all(type(c) is int for c in colors):
            raise ColoringError("coloring JSON needs integer 't' and an integer list 'colors'")
        return cls(t, tuple(colors))


def _fit(g: Graph, c: Coloring) -> None:
    if len(c) != g.m:
        raise ColoringError(f"coloring has {len(c)} entries, graph has {g.m} edges")


def colors_of(g: Graph, c: Coloring, edge_set: Iterable[int]) -> ColorSet:
    mask = 0
    for e in edge_set:
        if not 0 <= e < g.m:
            raise ColoringError(f"unknown edge id {e}")
        mask |= 1 << (c.colors[e] - 1)
    return ColorSet(c.t, mask)


@dataclass(frozen=True)
class Violation:
    """First reason a coloring fails a check.

    ``kind`` is one of ``"clash"`` (two edges at ``vertex`` share a color),
    ``"unused"`` (``color`` never appears) or ``"star"`` (the colors at
    ``vertex`` do not form the required kind of set).
    """

    kind: str
    vertex: int | None = None
    edges: tuple[int, int] | None = None
    color: int | None = None
    star: tuple[int, ...] | None = None

    def describe(self) -> str:
        if self.kind == "clash":
            e1, e2 = self.edges
            return f"edges {e1} and {e2} at vertex {self.vertex} both have color {self.color}"
        if self.kind == "unused":
            return f"color {self.color} is not used"
        return f"vertex {self.vertex} sees colors {{{', '.join(map(str, self.star))}}}"

    def to_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


def find_violation(g: Graph, c: Coloring, mode: str = "proper") -> Violation | None:
    """Return the first violation of ``mode`` or ``None`` if ``c`` passes.

    Vertices are scanned in index order; clashes are reported before
    star-shape failures, and the surjectivity failure comes last.
    """
    if mode not in ("proper", "interval", "cyclic"):
        raise ValueError(f"unknown mode {mode!r}")
    _fit(g, c)
    star_masks = []
    for x in range(g.n):
        first: dict[int, int] = {}
        mask = 0
        for e in g.star(x):
            col = c.colors[e]
            if col in first:
                return Violation("clash", vertex=x, edges=(first[col], e), color=col)
            first[col] = e
            mask |= 1 << (col - 1)
        star_masks.append(mask)
    used = 0
    for col in c.colors:
        used |= 1 << (col - 1)
    if mode != "proper":
        for x, mask in enumerate(star_masks):
            if mask == 0:
                continue
            ok = mask_is_interval(mask) if mode == "interval" else mask_is_cyclic_interval(mask, c.t)
            if not ok:
                return Violation("star", vertex=x, star=tuple(ColorSet(c.t, mask)))
    missing = ((1 << c.t) - 1) & ~used
    if missing:
        return Violation("unused", color=(missing & -missing).bit_length())
    return None


def is_proper(g: Graph, c: Coloring) -> bool:
    return find_violation(g, c, "proper") is None


def is_interval_coloring(g: Graph, c: Coloring) -> bool:
    if find_violation(g, c, "interval") is not None:
        return False
    # star size equals degree once the coloring is proper
    assert all(len(colors_of(g, c, g.star(x))) == len(g.star(x)) for x in range(g.n))
    return True


def is_cyclic_coloring(g: Graph, c: Coloring) -> bool:
    return find_violation(g, c, "cyclic") is None
