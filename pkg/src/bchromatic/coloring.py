"""Partial vertex colorings, properness and dominance checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from bchromatic.graph import Graph


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Per-vertex optional colors drawn from ``1..palette``.

    Colors outside the palette can be stored (e.g. when read from a file);
    the checking functions reject or report them.
    """

    colors: tuple[int | None, ...]
    palette: int

    def __post_init__(self) -> None:
        for v, col in enumerate(self.colors):
            if col is not None and (not isinstance(col, int) or isinstance(col, bool) or col < 1):
                raise ColoringError(f"vertex {v}: invalid color {col!r}")

    @classmethod
    def empty(cls, n: int, palette: int) -> Coloring:
        return cls((None,) * n, palette)

    @classmethod
    def from_mapping(cls, n: int, palette: int, mapping: Mapping[int, int]) -> Coloring:
        colors: list[int | None] = [None] * n
        for v, col in mapping.items():
            colors[v] = col
        return cls(tuple(colors), palette)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int | None:
        return self.colors[v]

    def updated(self, mapping: Mapping[int, int]) -> Coloring:
        colors = list(self.colors)
        for v, col in mapping.items():
            colors[v] = col
        return Coloring(tuple(colors), self.palette)

    def assigned(self) -> list[int]:
        return [v for v, col in enumerate(self.colors) if col is not None]

    @property
    def is_total(self) -> bool:
        return all(col is not None for col in self.colors)

    def out_of_range(self, palette: int | None = None) -> list[int]:
        k = self.palette if palette is None else palette
        return [v for v, col in enumerate(self.colors) if col is not None and col > k]

    def to_json(self) -> str:
        return json.dumps(list(self.colors))

    def to_text(self) -> str:
        return " ".join(f"{v}:{col}" for v, col in enumerate(self.colors) if col is not None)

    @classmethod
    def from_json(cls, text: str, palette: int | None = None) -> Coloring:
        data = json.loads(text)
        if not isinstance(data, list):
            raise ColoringError("coloring JSON must be an array")
        used = [c for c in data if c is not None]
        return cls(tuple(data), palette if palette is not None else max(used, default=0))

    @classmethod
    def from_text(cls, text: str, n: int, palette: int | None = None) -> Coloring:
        mapping: dict[int, int] = {}
        for token in text.split():
            try:
                v, col = (int(x) for x in token.split(":"))
            except ValueError:
                raise ColoringError(f"bad 'v:c' pair {token!r}") from None
            if not 0 <= v < n:
                raise ColoringError(f"vertex {v} out of range")
            mapping[v] = col
        return cls.from_mapping(n, palette if palette is not None else max(mapping.values(), default=0), mapping)

    @classmethod
    def parse(cls, text: str, n: int, palette: int | None = None) -> Coloring:
        """Read either serialization, detected from the first character."""
        if text.lstrip().startswith("["):
            c = cls.from_json(text, palette)
            if len(c) != n:
                raise ColoringError(f"coloring has {len(c)} entries, graph has {n} vertices")
            return c
        return cls.from_text(text, n, palette)


@dataclass
class BVerdict:
    proper: bool
    conflicts: list[tuple[int, int]]
    dominant_by_color: dict[int, list[int]]
    missing_colors: list[int]
    is_b_coloring: bool
    unused_colors: list[int] = field(default_factory=list)
    uncolored: list[int] = field(default_factory=list)
    out_of_range: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "is_b_coloring": self.is_b_coloring,
            "proper": self.proper,
            "conflicts": [list(e) for e in self.conflicts],
            "dominant_by_color": {str(k): v for k, v in self.dominant_by_color.items()},
            "missing_colors": self.missing_colors,
            "unused_colors": self.unused_colors,
            "uncolored": self.uncolored,
            "out_of_range": self.out_of_range,
        }


def _conflicts(g: Graph, c: Coloring) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.edges() if c[u] is not None and c[u] == c[v]]


def check_proper(g: Graph, c: Coloring) -> list[tuple[int, int]]:
    """Edges whose endpoints share a color; uncolored endpoints never conflict."""
    bad = c.out_of_range()
    if bad:
        raise ColoringError(f"colors outside 1..{c.palette} at vertices {bad}")
    return _conflicts(g, c)


def _dominant(g: Graph, c: Coloring, palette: int) -> dict[int, list[int]]:
    result: dict[int, list[int]] = {col: [] for col in range(1, palette + 1)}
    for v, col in enumerate(c.colors):
        if col is None or col > palette:
            continue
        seen = {c[u] for u in g.adj[v]}
        if all(j in seen for j in range(1, palette + 1) if j != col):
            result[col].append(v)
    return result


def dominant_vertices(g: Graph, c: Coloring) -> dict[int, list[int]]:
    """Map each palette color to the vertices of that color seeing every other color.

    Works on partial colorings: uncolored neighbors contribute nothing.
    """
    if check_proper(g, c):
        raise ColoringError("dominance is only defined for proper colorings")
    return _dominant(g, c, c.palette)


def verify_b_coloring(g: Graph, c: Coloring, k: int) -> BVerdict:
    """Check that ``c`` is a total proper coloring with ``k`` colors, each having a dominant vertex."""
    out_of_range = c.out_of_range(k)
    conflicts = _conflicts(g, c)
    dominant = _dominant(g, c, k)
    used = {col for col in c.colors if col is not None}
    uncolored = [v for v, col in enumerate(c.colors) if col is None]
    unused = [j for j in range(1, k + 1) if j not in used]
    missing = [j for j in range(1, k + 1) if not dominant[j]]
    proper = not conflicts and not out_of_range
    ok = proper and not uncolored and not unused and not missing and len(c) == g.n
    return BVerdict(
        proper=proper,
        conflicts=conflicts,
        dominant_by_color=dominant,
        missing_colors=missing,
        is_b_coloring=ok,
        unused_colors=unused,
        uncolored=uncolored,
        out_of_range=out_of_range,
    )


def greedy_complete(g: Graph, c: Coloring) -> Coloring:
    """Color every unassigned vertex, in ascending id, with its smallest free color."""
    if check_proper(g, c):
        raise ColoringError("greedy completion needs a proper partial coloring")
    colors = list(c.colors)
    for v in range(g.n):
        if colors[v] is not None:
            continue
        taken = {colors[u] for u in g.adj[v]}
        free = next((j for j in range(1, c.palette + 1) if j not in taken), None)
        if free is None:
            raise ColoringError(f"vertex {v} has no free color among 1..{c.palette}")
        colors[v] = free
    return Coloring(tuple(colors), c.palette)
