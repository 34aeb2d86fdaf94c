"""Coloring digraph between a colored core K and a rainbow patch F, and loop-raising rotations.

Colors are the digraph's vertices. Arc ``(i, j)`` means the F-vertex of
color ``i`` has no neighbor of color ``j`` inside K, so a loop ``(i, i)``
says that F-vertex is compatible with K. Rotating colors along a circuit
through a loopless color turns every circuit color into a loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Collection, Iterable

from bchromatic.coloring import Coloring
from bchromatic.graph import Graph


class DigraphError(ValueError):
    pass


class NoCircuit(RuntimeError):
    def __init__(self, color: int, digraph: ColoringDigraph):
        super().__init__(f"no circuit through color {color}; loops={digraph.loop_count()}")
        self.color = color
        self.digraph = digraph


class LoopMonotonicityError(AssertionError):
    pass


@dataclass(frozen=True)
class ColoringDigraph:
    order: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for i, j in self.arcs:
            if not (1 <= i <= self.order and 1 <= j <= self.order):
                raise DigraphError(f"arc ({i}, {j}) outside colors 1..{self.order}")

    def successors(self, i: int) -> list[int]:
        return sorted(j for a, j in self.arcs if a == i)

    def loops(self) -> list[int]:
        return sorted(i for i, j in self.arcs if i == j)

    def loop_count(self) -> int:
        return sum(1 for i, j in self.arcs if i == j)

    def to_dot(self) -> str:
        lines = ["digraph coloring {"]
        for i in range(1, self.order + 1):
            style = "doublecircle" if (i, i) in self.arcs else "circle"
            lines.append(f"  {i} [shape={style}];")
        for i, j in sorted(self.arcs):
            attr = " [color=red]" if i == j else ""
            lines.append(f"  {i} -> {j}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def loop_count(digraph: ColoringDigraph) -> int:
    return digraph.loop_count()


def _f_vertex_by_color(F: Iterable[int], c: Coloring, order: int) -> dict[int, int]:
    by_color: dict[int, int] = {}
    for v in F:
        col = c[v]
        if col is None or not 1 <= col <= order:
            raise DigraphError(f"F-vertex {v} has color {col!r}, expected one of 1..{order}")
        if col in by_color:
            raise DigraphError(f"color {col} appears twice in F ({by_color[col]}, {v})")
        by_color[col] = v
    missing = [j for j in range(1, order + 1) if j not in by_color]
    if missing:
        raise DigraphError(f"colors {missing} missing from F")
    return by_color


def build_digraph(g: Graph, K: Collection[int], F: Collection[int], c: Coloring) -> ColoringDigraph:
    """Coloring digraph on colors ``1..c.palette``; F must carry each color exactly once."""
    Kset = set(K)
    if Kset & set(F):
        raise DigraphError(f"K and F overlap: {sorted(Kset & set(F))}")
    for v in Kset:
        if c[v] is None:
            raise DigraphError(f"K-vertex {v} is uncolored")
    order = c.palette
    by_color = _f_vertex_by_color(F, c, order)
    arcs = set()
    for i, v in by_color.items():
        blocked = {c[u] for u in g.adj[v] if u in Kset}
        arcs.update((i, j) for j in range(1, order + 1) if j not in blocked)
    return ColoringDigraph(order, frozenset(arcs))


def find_circuit_through(
    digraph: ColoringDigraph, i: int, forbidden: Collection[int] = ()
) -> list[int] | None:
    """Directed circuit of length >= 2 starting at ``i`` and avoiding ``forbidden``.

    Depth-first search that tries successors in ascending order.
    """
    if i in forbidden:
        return None
    succ = {a: [b for b in digraph.successors(a) if b not in forbidden] for a in range(1, digraph.order + 1)}
    path = [i]
    visited = {i}
    stack = [iter(succ[i])]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            path.pop()
            continue
        if nxt == i:
            if len(path) >= 2:
                return list(path)
            continue
        if nxt in visited:
            continue
        visited.add(nxt)
        path.append(nxt)
        stack.append(iter(succ[nxt]))
    return None


def rotate_recolor(
    c: Coloring, F: Iterable[int], circuit: list[int], digraph: ColoringDigraph | None = None
) -> Coloring:
    """Shift each circuit color on F to its successor along the circuit.

    Vertices outside F and F-vertices with colors off the circuit are left
    alone. When ``digraph`` is given, every circuit arc is checked first.
    """
    if not circuit:
        return c
    if len(set(circuit)) != len(circuit):
        raise DigraphError(f"circuit {circuit} repeats a color")
    nxt = {a: circuit[(t + 1) % len(circuit)] for t, a in enumerate(circuit)}
    if digraph is not None:
        for a, b in nxt.items():
            if (a, b) not in digraph.arcs:
                raise DigraphError(f"arc ({a}, {b}) of circuit {circuit} is not in the digraph")
    return c.updated({v: nxt[c[v]] for v in F if c[v] in nxt})


@dataclass
class Rotation:
    circuit: list[int]
    loops_before: int
    loops_after: int


@dataclass
class SaturationResult:
    coloring: Coloring
    rotations: list[Rotation] = field(default_factory=list)


def saturate_loops(
    g: Graph, K: Collection[int], F: Collection[int], c: Coloring, pinned: int | None = None
) -> SaturationResult:
    """Rotate F's colors until every color carries a loop.

    Loopless colors other than ``pinned`` are handled smallest first; the
    pinned color never takes part in a circuit. Each rotation must raise
    the loop count, so at most ``order`` rotations happen.
    """
    Kset = set(K)
    digraph = build_digraph(g, Kset, F, c)
    rotations: list[Rotation] = []
    while digraph.loop_count() < digraph.order:
        loopless = [j for j in range(1, digraph.order + 1) if (j, j) not in digraph.arcs and j != pinned]
        if not loopless:
            raise NoCircuit(pinned if pinned is not None else 0, digraph)
        i = loopless[0]
        forbidden = () if pinned is None else (pinned,)
        circuit = find_circuit_through(digraph, i, forbidden)
        if circuit is None:
            raise NoCircuit(i, digraph)
        before = digraph.loop_count()
        new_c = rotate_recolor(c, F, circuit, digraph)
        for t, a in enumerate(circuit):
            b = circuit[(t + 1) % len(circuit)]
            v = next(u for u in F if c[u] == a)
            if any(new_c[u] == b for u in g.adj[v] if u in Kset):
                raise LoopMonotonicityError(f"vertex {v} moved to color {b} next to a K-vertex of color {b}")
        c = new_c
        digraph = build_digraph(g, Kset, F, c)
        after = digraph.loop_count()
        if after <= before:
            raise LoopMonotonicityError(f"rotation along {circuit} took loops {before} -> {after}")
        rotations.append(Rotation(circuit, before, after))
    return SaturationResult(c, rotations)
