"""Bipartite matching: augmenting paths and the degree-sum perfect matching."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class MatchingError(RuntimeError):
    pass


class PreconditionViolated(MatchingError):
    def __init__(self, left: int, right: int, degree_sum: int, t: int):
        super().__init__(
            f"degree sum d(u{left}) + d(v{right}) = {degree_sum} < t = {t}"
        )
        self.left, self.right, self.degree_sum, self.t = left, right, degree_sum, t


class ImpossibleState(MatchingError):
    """The degree-sum condition held yet no perfect matching was found."""


@dataclass(frozen=True)
class BipartiteGraph:
    left: int
    right: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for a, b in self.edges:
            if not (0 <= a < self.left and 0 <= b < self.right):
                raise ValueError(f"edge ({a}, {b}) out of range")

    @classmethod
    def from_edges(cls, left: int, right: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        return cls(left, right, frozenset(edges))

    @cached_property
    def left_adj(self) -> tuple[tuple[int, ...], ...]:
        rows: list[list[int]] = [[] for _ in range(self.left)]
        for a, b in self.edges:
            rows[a].append(b)
        return tuple(tuple(sorted(r)) for r in rows)

    @cached_property
    def right_adj(self) -> tuple[tuple[int, ...], ...]:
        cols: list[list[int]] = [[] for _ in range(self.right)]
        for a, b in self.edges:
            cols[b].append(a)
        return tuple(tuple(sorted(c)) for c in cols)


def max_matching(h: BipartiteGraph) -> list[tuple[int, int]]:
    """Maximum-cardinality matching by repeated augmenting-path search.

    Left vertices are processed in index order and candidates are tried in
    ascending order, so the result is a deterministic function of ``h``.
    """
    match_right: list[int | None] = [None] * h.right

    def augment(a: int, seen: list[bool]) -> bool:
        for b in h.left_adj[a]:
            if seen[b]:
                continue
            seen[b] = True
            owner = match_right[b]
            if owner is None or augment(owner, seen):
                match_right[b] = a
                return True
        return False

    for a in range(h.left):
        augment(a, [False] * h.right)
    return sorted((a, b) for b, a in enumerate(match_right) if a is not None)


def check_degree_sum(h: BipartiteGraph) -> None:
    """Raise PreconditionViolated unless both sides have size t and
    ``d(u) + d(v) >= t`` for every left ``u`` and right ``v``."""
    if h.left != h.right:
        raise MatchingError(f"sides differ in size ({h.left} vs {h.right})")
    t = h.left
    if t == 0:
        return
    u = min(range(t), key=lambda a: len(h.left_adj[a]))
    v = min(range(t), key=lambda b: len(h.right_adj[b]))
    total = len(h.left_adj[u]) + len(h.right_adj[v])
    if total < t:
        raise PreconditionViolated(u, v, total, t)


def exchange_step(h: BipartiteGraph, matching: list[tuple[int, int]]) -> list[tuple[int, int]] | None:
    """Grow a non-perfect matching by one via a single swap.

    With free vertices ``u`` (left) and ``v`` (right), look for a matched
    edge ``(a, b)`` where ``b`` is adjacent to ``u`` and ``a`` is adjacent to
    ``v``; replace it by ``(a, v)`` and ``(u, b)``. Returns None when no
    such edge exists for the first free pair.
    """
    matched_left = {a for a, _ in matching}
    matched_right = {b for _, b in matching}
    free_left = [a for a in range(h.left) if a not in matched_left]
    free_right = [b for b in range(h.right) if b not in matched_right]
    if not free_left or not free_right:
        return None
    u, v = free_left[0], free_right[0]
    if (u, v) in h.edges:
        return sorted(matching + [(u, v)])
    for a, b in matching:
        if (u, b) in h.edges and (a, v) in h.edges:
            rest = [e for e in matching if e != (a, b)]
            return sorted(rest + [(a, v), (u, b)])
    return None


def perfect_matching(h: BipartiteGraph) -> list[tuple[int, int]]:
    """Perfect matching of a balanced bipartite graph satisfying the degree-sum condition.

    The condition is checked up front. Under it every maximum matching is
    perfect, so a shortfall is reported as ImpossibleState.
    """
    check_degree_sum(h)
    matching = max_matching(h)
    if len(matching) != h.left:
        grown = exchange_step(h, matching)
        raise ImpossibleState(
            f"maximum matching has size {len(matching)} < {h.left}; "
            f"single exchange {'succeeds' if grown else 'fails'}"
        )
    return matching
