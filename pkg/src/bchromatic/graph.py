"""Simple undirected graphs: structure predicates, generators and DIMACS I/O."""

from __future__ import annotations

import math
import random
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph data or infeasible generator parameters."""


class DimacsError(GraphError):
    pass


class GenerationError(GraphError):
    """Generator parameters admit no graph."""


class BudgetExhausted(GenerationError):
    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbors of ``v``.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        for v, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbors of {v} are not sorted and distinct")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if v not in self.neighbor_sets[u]:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adj)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]


def degree_if_regular(g: Graph) -> int | None:
    if g.n == 0:
        return None
    d = g.degree(0)
    if all(len(nbrs) == d for nbrs in g.adj):
        return d
    return None


def _find_c4(adj: list[set[int]] | tuple[frozenset[int], ...]) -> tuple[int, int, int, int] | None:
    # Two vertices with two common neighbors close a 4-cycle.
    center_of: dict[tuple[int, int], int] = {}
    for w in range(len(adj)):
        nbrs = sorted(adj[w])
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                other = center_of.get((a, b))
                if other is not None:
                    return (a, w, b, other)
                center_of[(a, b)] = w
    return None


def find_c4(g: Graph) -> tuple[int, int, int, int] | None:
    """Return a 4-cycle ``(a, w, b, x)`` (in cyclic order) or None."""
    return _find_c4(g.neighbor_sets)


def has_c4(g: Graph) -> bool:
    return find_c4(g) is not None


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def _check_regular_params(n: int, d: int) -> None:
    if n < 0 or d < 0:
        raise GenerationError("n and d must be non-negative")
    if (n * d) % 2:
        raise GenerationError(f"n*d must be even (n={n}, d={d})")
    if d >= n and not (n == 0 and d == 0):
        raise GenerationError(f"need d < n (n={n}, d={d})")


def _pairing(n: int, d: int, rng: random.Random, max_tries: int) -> list[set[int]]:
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        adj: list[set[int]] = [set() for _ in range(n)]
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or v in adj[u]:
                ok = False
                break
            adj[u].add(v)
            adj[v].add(u)
        if ok:
            return adj
    raise BudgetExhausted(f"no simple pairing found in {max_tries} tries", attempts=max_tries)


def _freeze(adj: list[set[int]]) -> Graph:
    return Graph(len(adj), tuple(tuple(sorted(s)) for s in adj))


def gen_random_regular(n: int, d: int, seed: int, max_tries: int = 200_000) -> Graph:
    """Uniform random simple d-regular graph via the pairing model with rejection."""
    _check_regular_params(n, d)
    rng = random.Random(seed)
    return _freeze(_pairing(n, d, rng, max_tries))


def _edge_in_c4(adj: list[set[int]], p: int, q: int) -> bool:
    for a in adj[p]:
        if a == q:
            continue
        for b in adj[a]:
            if b != p and b != q and q in adj[b]:
                return True
    return False


def _repair_c4s(adj: list[set[int]], rng: random.Random, budget: int) -> int | None:
    """Remove 4-cycles by degree-preserving swaps; returns swaps attempted or None."""
    edges = sorted((u, v) for u in range(len(adj)) for v in adj[u] if u < v)
    index = {e: i for i, e in enumerate(edges)}
    attempts = 0
    while True:
        cycle = _find_c4(adj)
        if cycle is None:
            return attempts
        if attempts >= budget:
            return None
        attempts += 1
        pos = rng.randrange(4)
        u, v = cycle[pos], cycle[(pos + 1) % 4]
        x, z = edges[rng.randrange(len(edges))]
        if rng.random() < 0.5:
            x, z = z, x
        if len({u, v, x, z}) < 4 or x in adj[u] or z in adj[v]:
            continue
        for a, b in ((u, v), (x, z)):
            adj[a].discard(b)
            adj[b].discard(a)
        for a, b in ((u, x), (v, z)):
            adj[a].add(b)
            adj[b].add(a)
        if _edge_in_c4(adj, u, x) or _edge_in_c4(adj, v, z):
            for a, b in ((u, x), (v, z)):
                adj[a].discard(b)
                adj[b].discard(a)
            for a, b in ((u, v), (x, z)):
                adj[a].add(b)
                adj[b].add(a)
            continue
        i, j = index.pop((min(u, v), max(u, v))), index.pop((min(x, z), max(x, z)))
        e1, e2 = (min(u, x), max(u, x)), (min(v, z), max(v, z))
        edges[i], edges[j] = e1, e2
        index[e1], index[e2] = i, j


def gen_random_regular_c4free(
    n: int, d: int, seed: int, budget: int = 20_000, max_candidates: int = 20
) -> Graph:
    """Random d-regular graph without 4-cycles.

    Each candidate comes from the pairing model; its 4-cycles are then
    removed by random two-edge swaps that never create a new 4-cycle.
    ``budget`` bounds the swaps tried per candidate.
    """
    _check_regular_params(n, d)
    # A C4-free d-regular graph has at least d^2 - d + 1 vertices: the d
    # neighbors of v each have at most one neighbor among N(v).
    if d >= 2 and n < d * d - d + 1:
        raise GenerationError(f"no C4-free {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    total = 0
    for _ in range(max_candidates):
        adj = _pairing(n, d, rng, 200_000)
        used = _repair_c4s(adj, rng, budget)
        if used is not None:
            return _freeze(adj)
        total += budget
    raise BudgetExhausted(
        f"C4 repair failed for {max_candidates} candidates ({total} swaps attempted)", attempts=total
    )


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(u, v) for u in range(k) for v in range(u + 1, k)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


_NAMED = re.compile(r"^\s*([a-z_]+)\s*(?:\(\s*([0-9,\s]*)\))?\s*$")


def named_graph(name: str) -> Graph:
    """Build ``petersen``, ``complete(k)``, ``cycle(k)`` or ``complete_bipartite(a,b)``."""
    match = _NAMED.match(name.lower())
    if not match:
        raise GraphError(f"cannot parse graph name {name!r}")
    kind, raw = match.group(1), match.group(2)
    try:
        args = [int(x) for x in raw.split(",")] if raw and raw.strip() else []
    except ValueError:
        raise GraphError(f"bad parameters in {name!r}") from None
    if any(a < 0 for a in args):
        raise GraphError(f"negative parameter in {name!r}")
    builders = {
        "petersen": (0, lambda: _petersen()),
        "complete": (1, lambda: complete_graph(*args)),
        "cycle": (1, lambda: cycle_graph(*args)),
        "complete_bipartite": (2, lambda: complete_bipartite(*args)),
    }
    if kind not in builders:
        raise GraphError(f"unknown graph {kind!r}")
    arity, build = builders[kind]
    if len(args) != arity:
        raise GraphError(f"{kind} takes {arity} parameter(s), got {len(args)}")
    return build()


def parse_dimacs(text: str | bytes) -> Graph:
    """Parse DIMACS ``.col`` text (1-based ids, duplicate edges collapsed)."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsError(f"line {lineno}: malformed header {raw!r}")
            try:
                n, _ = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {raw!r}") from None
            if n < 0:
                raise DimacsError(f"line {lineno}: negative vertex count")
        elif tag == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise DimacsError(f"line {lineno}: malformed edge {raw!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed edge {raw!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"line {lineno}: vertex id out of range in {raw!r}")
            if u == v:
                raise DimacsError(f"line {lineno}: self-loop {raw!r}")
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise DimacsError("missing 'p edge n m' header")
    return Graph.from_edges(n, edges)


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
