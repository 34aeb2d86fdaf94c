import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bchromatic.coloring import Coloring, check_proper
from bchromatic.digraph import (
    ColoringDigraph,
    DigraphError,
    NoCircuit,
    build_digraph,
    find_circuit_through,
    loop_count,
    rotate_recolor,
    saturate_loops,
)
from bchromatic.extension import FInit, Mode, classify, extend_once, init_state, initial_f_coloring, select_candidate
from bchromatic.graph import Graph, gen_random_regular, gen_random_regular_c4free


def col(values, palette):
    return Coloring(tuple(values), palette)


def full(order):
    return frozenset((i, j) for i in range(1, order + 1) for j in range(1, order + 1))


def test_empty_core_gives_complete_digraph():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    D = build_digraph(g, [], [0, 1, 2, 3], col([1, 2, 3, 4], 4))
    assert D.arcs == full(4) and loop_count(D) == 4


def test_dominant_without_core_neighbors_sees_every_color():
    # y=0 with neighbors 1,2; core vertex 3 hangs off neighbor 1.
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3)])
    D = build_digraph(g, [3], [0, 1, 2], col([1, 2, 3, 2], 3))
    assert {(1, j) for j in (1, 2, 3)} <= D.arcs


def test_arc_definition_single_blocker():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3)])
    D = build_digraph(g, [3], [0, 1, 2], col([1, 2, 3, 2], 3))
    assert D.successors(2) == [1, 3]
    assert (2, 2) not in D.arcs


def test_build_digraph_preconditions():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(DigraphError):
        build_digraph(g, [0], [0, 1], col([1, 2, 1], 2))
    with pytest.raises(DigraphError):
        build_digraph(g, [], [0, 1], col([1, 1, None], 2))
    with pytest.raises(DigraphError):
        build_digraph(g, [], [0], col([1, 2, None], 2))


def test_loop_count_extremes():
    assert loop_count(ColoringDigraph(5, full(5))) == 5
    assert loop_count(ColoringDigraph(5, frozenset())) == 0


def test_find_circuit_examples():
    assert find_circuit_through(ColoringDigraph(2, frozenset({(1, 2), (2, 1)})), 1) == [1, 2]
    D = ColoringDigraph(3, frozenset({(1, 2), (2, 3), (3, 1)}))
    assert find_circuit_through(D, 2) == [2, 3, 1]
    assert find_circuit_through(ColoringDigraph(3, frozenset({(2, 1), (3, 1)})), 1) is None
    assert find_circuit_through(D, 2, forbidden={1}) is None
    assert find_circuit_through(ColoringDigraph(1, frozenset({(1, 1)})), 1) is None


def test_find_circuit_prefers_small_colors():
    D = ColoringDigraph(4, frozenset({(1, 3), (1, 2), (2, 1), (3, 1), (1, 4), (4, 1)}))
    assert find_circuit_through(D, 1) == [1, 2]


def test_rotate_swaps_two_cycle():
    c = col([1, 2, 5], 2)
    out = rotate_recolor(c, [0, 1], [1, 2])
    assert out.colors == (2, 1, 5)


def test_rotate_identity_cases():
    c = col([1, 2, 3], 3)
    assert rotate_recolor(c, [0, 1, 2], []) == c
    assert rotate_recolor(c, [0], [2, 3]) == c


def test_rotate_checks_arcs():
    D = ColoringDigraph(2, frozenset({(1, 2)}))
    with pytest.raises(DigraphError):
        rotate_recolor(col([1, 2], 2), [0, 1], [1, 2], D)


def fixture_one_rotation():
    # y=0 (color 1) with neighbors a=1 (color 2) and b=2 (color 3);
    # a touches core vertex 3 (color 2), b touches core vertex 4 (color 3).
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 3), (2, 4)])
    return g, [3, 4], [0, 1, 2], col([1, 2, 3, 2, 3], 3)


def test_saturate_single_rotation():
    g, K, F, c = fixture_one_rotation()
    assert loop_count(build_digraph(g, K, F, c)) == 1
    res = saturate_loops(g, K, F, c, pinned=1)
    assert len(res.rotations) == 1
    assert res.rotations[0].circuit == [2, 3]
    assert res.coloring.colors == (1, 3, 2, 2, 3)
    assert check_proper(g, res.coloring) == []


def test_saturate_noop_when_core_empty():
    g = Graph.from_edges(3, [(0, 1), (0, 2)])
    c = col([1, 2, 3], 3)
    res = saturate_loops(g, [], [0, 1, 2], c, pinned=1)
    assert res.coloring == c and res.rotations == []


def test_saturate_reports_no_circuit():
    # Both neighbors blocked from everything except the pinned color.
    g = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    c = col([1, 2, 3, 2, 3, 2, 3], 3)
    with pytest.raises(NoCircuit) as info:
        saturate_loops(g, [3, 4, 5, 6], [0, 1, 2], c, pinned=1)
    assert info.value.color == 2
    assert "digraph" in info.value.digraph.to_dot()


def test_dot_dump_marks_loops():
    dot = ColoringDigraph(2, frozenset({(1, 1), (1, 2)})).to_dot()
    assert "1 [shape=doublecircle]" in dot and "2 [shape=circle]" in dot and "1 -> 2;" in dot


def midrun_instances(seed: int, steps: int):
    """(state, y) pairs taken from a real extension run on a C4-free 4-regular graph."""
    g = gen_random_regular_c4free(68, 4, seed)
    state = init_state(g)
    out = []
    for _ in range(steps):
        cls = classify(state, Mode.C4FREE)
        out.append((state, select_candidate(cls, state)))
        state, _ = extend_once(state, Mode.C4FREE)
    return out


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 5), st.integers(0, 4), st.integers(0, 2**32))
def test_rotation_properties_on_random_f_colorings(seed, step, rseed):
    state, y = midrun_instances(seed, 5)[step]
    g = state.g
    F = [y, *g.adj[y]]
    K = state.C
    c = initial_f_coloring(state, y, FInit.RANDOM, random.Random(rseed))
    D = build_digraph(g, K, F, c)
    union_ok = not check_proper(g, c)
    assert (loop_count(D) == state.d + 1) == union_ok
    res = saturate_loops(g, K, F, c, pinned=state.k + 1)
    cur = c
    for rot in res.rotations:
        before = build_digraph(g, K, F, cur)
        nxt = rotate_recolor(cur, F, rot.circuit, before)
        assert sorted(nxt[v] for v in F) == sorted(cur[v] for v in F)
        assert all(nxt[v] == cur[v] for v in range(g.n) if v not in F)
        for a, b in g.edges():
            if a in F and b in F:
                assert nxt[a] != nxt[b]
        assert loop_count(build_digraph(g, K, F, nxt)) > loop_count(before)
        cur = nxt
    assert cur == res.coloring
    assert loop_count(build_digraph(g, K, F, cur)) == state.d + 1
    assert check_proper(g, cur) == []


def test_loop_saturation_equals_boundary_properness_general():
    g = gen_random_regular(104, 4, 3)
    state = init_state(g)
    rng = random.Random(0)
    for _ in range(4):
        cls = classify(state, Mode.GENERAL)
        y = select_candidate(cls, state)
        F = [y, *g.adj[y]]
        for _ in range(30):
            c = initial_f_coloring(state, y, FInit.RANDOM, rng)
            assert (loop_count(build_digraph(g, state.C, F, c)) == 5) == (not check_proper(g, c))
        state, _ = extend_once(state, Mode.GENERAL)
