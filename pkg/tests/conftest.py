from __future__ import annotations

import itertools
import sys

import pytest

from bchromatic.graph import Graph


def assert_simple_graph(g: Graph) -> None:
    """Independent re-check of the Graph invariants from the raw adjacency."""
    assert len(g.adj) == g.n
    for v, nbrs in enumerate(g.adj):
        assert len(set(nbrs)) == len(nbrs)
        assert v not in nbrs
        for u in nbrs:
            assert 0 <= u < g.n
            assert v in g.adj[u]


def brute_has_c4(g: Graph) -> bool:
    for a, b, c, d in itertools.permutations(range(g.n), 4):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d) and g.has_edge(d, a):
            return True
    return False


def brute_is_b_coloring(g: Graph, colors: list[int], k: int) -> bool:
    if any(c is None or not 1 <= c <= k for c in colors):
        return False
    if any(colors[u] == colors[v] for u, v in g.edges()):
        return False
    for j in range(1, k + 1):
        ok = False
        for v in range(g.n):
            if colors[v] == j and {colors[u] for u in g.adj[v]} >= set(range(1, k + 1)) - {j}:
                ok = True
        if not ok:
            return False
    return True


@pytest.fixture
def petersen() -> Graph:
    from bchromatic.graph import named_graph

    return named_graph("petersen")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
