"""Dominant-vertex extension: grow a b-coloring with d+1 colors one color at a time.

State after ``k`` steps: vertices ``y_1..y_k`` are dominant for colors
``1..k`` and ``C`` is the union of their closed neighborhoods, all colored.
A step classifies the uncolored vertices by how they touch ``C``, picks a
vertex ``y`` far enough from ``C``, gives it color ``k+1`` and colors its
neighborhood with the other ``d`` colors so nothing clashes with ``C``.
Once ``d+1`` colors have dominant vertices, the rest of the graph is
colored greedily.

Every counting inequality that justifies the choice of ``y`` is checked at
runtime and tallied in a :class:`CheckLog`; a failed check aborts the run.
"""

from __future__ import annotations

import logging
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from bchromatic.coloring import Coloring, check_proper, greedy_complete, verify_b_coloring, BVerdict
from bchromatic.digraph import NoCircuit, build_digraph, saturate_loops
from bchromatic.graph import Graph, degree_if_regular, has_c4
from bchromatic.matching import BipartiteGraph, MatchingError, max_matching, perfect_matching

log = logging.getLogger(__name__)


class Mode(str, Enum):
    C4FREE = "c4free"
    GENERAL = "general"


class Strategy(str, Enum):
    ROTATION = "rotation"
    MATCHING = "matching"


class FInit(str, Enum):
    """How the neighborhood of a new dominant vertex is first colored (rotation strategy)."""

    MATCHING = "matching"
    ASCENDING = "ascending"
    RANDOM = "random"


class ExtensionError(RuntimeError):
    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message)
        self.details = details or {}


class NoCandidate(ExtensionError):
    pass


class InvariantViolation(ExtensionError):
    pass


class NoPerfectMatching(ExtensionError):
    pass


class StepCircuitFailure(ExtensionError):
    pass


class SolveError(ExtensionError):
    """A solve run failed; ``snapshot`` holds everything needed to replay it."""

    def __init__(self, message: str, snapshot: dict[str, Any], cause: Exception):
        super().__init__(message, snapshot)
        self.snapshot = snapshot
        self.cause = cause


class CheckLog(Counter):
    """Tally of runtime checks performed, keyed by check name."""

    def require(self, name: str, ok: bool, detail: str = "") -> None:
        self[name] += 1
        if not ok:
            raise InvariantViolation(f"check {name!r} failed: {detail}", {"check": name, "detail": detail})


def c4free_bound(d: int) -> int:
    return d**3 + d


def general_bound(d: int) -> int:
    return 2 * d**3 + 2 * d - 2 * d**2


@dataclass
class ExtensionState:
    g: Graph
    d: int
    k: int
    dominants: list[tuple[int, int]]
    coloring: Coloring
    extended: int = 0

    @property
    def C(self) -> set[int]:
        return set(self.coloring.assigned())

    @property
    def adopted(self) -> int:
        return self.k - self.extended

    def check(self, checks: CheckLog) -> None:
        C = self.C
        checks.require(
            "state.size",
            len(C) == self.extended * (self.d + 1),
            f"|C|={len(C)} but {self.extended} closed neighborhoods of size {self.d + 1}",
        )
        checks.require("state.k", self.k <= self.d + 1, f"k={self.k}")
        checks.require("state.proper", not check_proper(self.g, self.coloring), "coloring of C is improper")
        for v, col in self.dominants:
            seen = {self.coloring[u] for u in self.g.adj[v]}
            missing = [j for j in range(1, self.d + 2) if j != col and j not in seen]
            checks.require("state.dominant", self.coloring[v] == col and not missing, f"vertex {v} misses {missing}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "extended": self.extended,
            "dominants": [list(p) for p in self.dominants],
            "coloring": list(self.coloring.colors),
        }


def init_state(g: Graph) -> ExtensionState:
    d = degree_if_regular(g)
    if d is None or d < 1:
        raise ValueError("extension needs a regular graph of degree >= 1")
    return ExtensionState(g, d, 0, [], Coloring.empty(g.n, d + 1))


def _union(levels: list[set[int]], lo: int, hi: int) -> set[int]:
    out: set[int] = set()
    for i in range(max(lo, 0), min(hi, len(levels) - 1) + 1):
        out |= levels[i]
    return out


@dataclass
class Classification:
    """Partition of the uncolored vertices relative to the colored set ``C``.

    ``levels[i]`` holds the uncolored vertices with exactly ``i`` neighbors in
    ``C``; ``levels[0]`` is everything untouched by ``C`` and ``R`` is the
    union of the others. The named ranges and S-sets depend on ``scheme``
    (``c4free``, ``general`` or ``matching``); ``eligible`` lists the
    uncolored vertices outside ``R`` and every S-set, in ascending order.
    """

    scheme: str
    C: set[int]
    levels: list[set[int]]
    R: set[int]
    ranges: dict[str, set[int]]
    S: dict[str, set[int]]
    eligible: list[int]
    color_sets: dict[int, set[int]] = field(default_factory=dict)
    S_prime: dict[int, set[int]] = field(default_factory=dict)
    S0_parts: dict[int, set[int]] = field(default_factory=dict)

    def sizes(self) -> dict[str, int]:
        out = {"C": len(self.C), "R": len(self.R), "eligible": len(self.eligible)}
        out.update({f"R_{i}": len(s) for i, s in enumerate(self.levels)})
        out.update({k: len(v) for k, v in self.ranges.items()})
        out.update({k: len(v) for k, v in self.S.items()})
        out.update({f"C_{i}": len(v) for i, v in self.color_sets.items()})
        out.update({f"S'_{i}": len(v) for i, v in self.S_prime.items()})
        return out


def _levels(state: ExtensionState) -> tuple[set[int], list[set[int]]]:
    g, C = state.g, state.C
    levels: list[set[int]] = [set() for _ in range(state.d + 1)]
    for v in range(g.n):
        if v not in C:
            levels[sum(1 for u in g.adj[v] if u in C)].add(v)
    return C, levels


def _count(g: Graph, v: int, target: set[int]) -> int:
    return sum(1 for u in g.adj[v] if u in target)


def _members(g: Graph, pool: set[int], target: set[int], threshold: int) -> set[int]:
    # A threshold of 0 would admit every vertex; the counting arguments need >= 1.
    threshold = max(threshold, 1)
    return {v for v in pool if _count(g, v, target) >= threshold}


def classify(state: ExtensionState, mode: Mode | str, checks: CheckLog | None = None) -> Classification:
    """Classify uncolored vertices and check the counting inequalities for ``mode``."""
    mode = Mode(mode)
    checks = CheckLog() if checks is None else checks
    g, d = state.g, state.d
    C, levels = _levels(state)
    R = _union(levels, 1, d)
    outside = levels[0]
    half_up = (d + 1) // 2  # floor((d+1)/2)
    half_dn = d // 2  # ceil((d-1)/2)
    run_checks = state.adopted == 0

    if mode is Mode.C4FREE:
        R_a, R_b, R_c = _union(levels, 2, half_up), _union(levels, 4, half_up), _union(levels, half_up + 1, d)
        S = {
            "S_1": _members(g, outside, R_a, d - 2),
            "S_2": _members(g, outside, R_b, half_dn),
            "S_3": _members(g, outside, R_c, 1),
        }
        cls = Classification("c4free", C, levels, R, {"R_a": R_a, "R_b": R_b, "R_c": R_c}, S, [])
        if run_checks and d >= 4:
            lhs = len(R) + len(R_a) + 2 * len(R_b) + half_up * len(R_c)
            checks.require("c4free.count_a", lhs <= d * d * (d - 1), f"{lhs} > {d * d * (d - 1)}")
            checks.require("c4free.S_1", len(S["S_1"]) <= len(R_a), f"|S_1|={len(S['S_1'])} |R_a|={len(R_a)}")
            checks.require(
                "c4free.S_2",
                half_dn * len(S["S_2"]) <= (d - 4) * len(R_b) and (not R_b or len(S["S_2"]) < 2 * len(R_b)),
                f"|S_2|={len(S['S_2'])} |R_b|={len(R_b)}",
            )
            checks.require(
                "c4free.S_3", len(S["S_3"]) <= (half_dn - 1) * len(R_c), f"|S_3|={len(S['S_3'])} |R_c|={len(R_c)}"
            )
            covered = len(C) + len(R) + sum(len(s) for s in S.values())
            checks.require("c4free.coverage", covered <= c4free_bound(d), f"{covered} > {c4free_bound(d)}")
    else:
        R_a, R_b = _union(levels, 3, half_up), _union(levels, half_up + 1, d)
        color_sets = {i: set() for i in range(1, d + 2)}
        for v in R:
            for u in g.adj[v]:
                col = state.coloring[u]
                if col is not None:
                    color_sets[col].add(v)
        S = {"S_1": _members(g, outside, R_a, half_dn), "S_2": _members(g, outside, R_b, 1)}
        S_prime = {i: _members(g, outside, color_sets[i], d - 1) for i in color_sets if i != state.k + 1}
        S["S'"] = set().union(*S_prime.values()) if S_prime else set()
        cls = Classification(
            "general", C, levels, R, {"R_a": R_a, "R_b": R_b}, S, [], color_sets=color_sets, S_prime=S_prime
        )
        if run_checks and d >= 4:
            lhs = len(R) + 2 * len(R_a) + half_up * len(R_b)
            checks.require("general.count_a", lhs <= d * d * (d - 1), f"{lhs} > {d * d * (d - 1)}")
            k = state.k
            for i, Ci in color_sets.items():
                cap = d * (d - 1) if (k == d and i == d + 1) else (d - 1) ** 2
                checks.require("general.C_i", len(Ci) <= min(cap, max(k, 1) * (d - 1)), f"|C_{i}|={len(Ci)}")
            S_1, S_2 = S["S_1"], S["S_2"]
            checks.require(
                "general.S_1",
                half_dn * len(S_1) <= (d - 3) * len(R_a) and (not R_a or len(S_1) < 2 * len(R_a)),
                f"|S_1|={len(S_1)} |R_a|={len(R_a)}",
            )
            checks.require(
                "general.S_2", len(S_2) <= (half_dn - 1) * len(R_b), f"|S_2|={len(S_2)} |R_b|={len(R_b)}"
            )
            for i, Si in S_prime.items():
                checks.require(
                    "general.S'_i",
                    len(Si) <= len(color_sets[i]) and len(Si) <= (d - 1) ** 2,
                    f"|S'_{i}|={len(Si)} |C_{i}|={len(color_sets[i])}",
                )
            S_all = S["S'"]
            checks.require("general.S'", len(S_all) <= d * (d - 1) ** 2, f"|S'|={len(S_all)}")
            covered = len(C) + len(R) + len(S_1 | S_2 | S["S'"])
            checks.require("general.coverage", covered <= general_bound(d), f"{covered} > {general_bound(d)}")

    excluded = C | R
    for s in cls.S.values():
        excluded |= s
    cls.eligible = [v for v in range(g.n) if v not in excluded]
    return cls


def classify_matching(state: ExtensionState, checks: CheckLog | None = None) -> Classification:
    """Classification used by the matching construction (C4-free graphs)."""
    checks = CheckLog() if checks is None else checks
    g, d = state.g, state.d
    C, levels = _levels(state)
    R = _union(levels, 1, d)
    outside = levels[0]
    half_up, half_dn = (d + 1) // 2, d // 2
    R_a, R_b, R_c = _union(levels, 1, half_up), _union(levels, 3, half_up), _union(levels, half_up + 1, d)
    R_2 = levels[2] if d >= 2 else set()
    S_1 = _members(g, outside, R_b, half_dn)
    S_2 = _members(g, outside, R_c, 1)
    # Levels 2..floor((d+1)/2)+1; anything higher already lands in S_2.
    wide = _union(levels, 2, half_up + 1)
    S_0 = {v for v in outside - S_1 - S_2 if _count(g, v, wide) >= max(d - 2, 1)}
    parts: dict[int, set[int]] = {}
    for v in S_0:
        parts.setdefault(_count(g, v, R_b), set()).add(v)
    cls = Classification(
        "matching",
        C,
        levels,
        R,
        {"R_a": R_a, "R_b": R_b, "R_c": R_c},
        {"S_0": S_0, "S_1": S_1, "S_2": S_2},
        [],
        S0_parts=parts,
    )
    if state.adopted == 0 and d >= 4:
        lhs = len(R) + len(R_2) + 2 * len(R_b) + half_up * len(R_c)
        checks.require("matching.count_a", lhs <= d * d * (d - 1), f"{lhs} > {d * d * (d - 1)}")
        first = sum(i * len(p) for i, p in parts.items()) + half_dn * len(S_1)
        checks.require("matching.ineq_1", first <= (d - 3) * len(R_b), f"{first} > {(d - 3) * len(R_b)}")
        second = sum((d - 2 - i) * len(p) for i, p in parts.items())
        checks.require("matching.ineq_2", second <= (d - 2) * len(R_2), f"{second} > {(d - 2) * len(R_2)}")
        chain_l = (d - 2) * len(S_0) + 2 * half_dn * len(S_1)
        chain_r = 2 * (d - 3) * len(R_b) + (d - 2) * len(R_2)
        checks.require("matching.chain", chain_l <= chain_r, f"{chain_l} > {chain_r}")
        checks.require(
            "matching.ineq_b",
            len(S_0) + len(S_1) <= 2 * len(R_b) + len(R_2),
            f"|S_0|+|S_1|={len(S_0) + len(S_1)} > {2 * len(R_b) + len(R_2)}",
        )
        checks.require(
            "matching.S_2", len(S_2) <= (half_dn - 1) * len(R_c), f"|S_2|={len(S_2)} |R_c|={len(R_c)}"
        )
        covered = len(C) + len(R) + len(S_0) + len(S_1) + len(S_2)
        checks.require("matching.coverage", covered <= c4free_bound(d), f"{covered} > {c4free_bound(d)}")
    excluded = C | R | S_0 | S_1 | S_2
    cls.eligible = [v for v in range(g.n) if v not in excluded]
    return cls


def select_candidate(cls: Classification, state: ExtensionState, checks: CheckLog | None = None) -> int:
    """Smallest eligible vertex; raises NoCandidate with the set sizes when none exists."""
    checks = CheckLog() if checks is None else checks
    if not cls.eligible:
        raise NoCandidate(f"no eligible vertex for color {state.k + 1}", {"sizes": cls.sizes()})
    y = cls.eligible[0]
    g, d = state.g, state.d
    nbrs = set(g.adj[y])
    checks.require("candidate.disjoint", not (nbrs & cls.C), f"vertex {y} touches C")
    if state.adopted or d < 4:
        return y
    low = cls.levels[0] | cls.levels[1]
    if cls.scheme in ("c4free", "matching"):
        got = len(nbrs & low)
        checks.require(f"{cls.scheme}.candidate_b", got >= 3, f"vertex {y} has {got} neighbors in R_0 u R_1")
    else:
        half_dn = d // 2
        checks.require(
            "general.candidate_R_a", len(nbrs & cls.ranges["R_a"]) <= half_dn - 1, f"vertex {y}"
        )
        checks.require("general.candidate_R_b", not (nbrs & cls.ranges["R_b"]), f"vertex {y}")
        for i, Ci in cls.color_sets.items():
            if i != state.k + 1:
                checks.require("general.candidate_C_i", len(nbrs & Ci) <= d - 2, f"vertex {y}, color {i}")
    return y


def _blocked_colors(state: ExtensionState, w: int) -> list[int]:
    """Colors of ``w``'s already-colored neighbors, with multiplicity."""
    return [col for u in state.g.adj[w] if (col := state.coloring[u]) is not None]


def initial_f_coloring(
    state: ExtensionState, y: int, f_init: FInit | str = FInit.MATCHING, rng: random.Random | None = None
) -> Coloring:
    """Give ``y`` color k+1 and its neighbors the other d colors.

    ``matching`` pairs neighbors with colors they can take next to ``C`` via
    a maximum matching, which maximizes the number of compatible pairs;
    ``ascending`` and ``random`` ignore ``C``.
    """
    f_init = FInit(f_init)
    new_color = state.k + 1
    nbrs = list(state.g.adj[y])
    colors = [j for j in range(1, state.d + 2) if j != new_color]
    if f_init is FInit.ASCENDING:
        chosen = colors
    elif f_init is FInit.RANDOM:
        chosen = list(colors)
        (rng or random.Random(0)).shuffle(chosen)
    else:
        blocked = [set(_blocked_colors(state, w)) for w in nbrs]
        h = BipartiteGraph.from_edges(
            len(nbrs), len(colors), [(a, b) for a in range(len(nbrs)) for b, j in enumerate(colors) if j not in blocked[a]]
        )
        pairs = dict(max_matching(h))
        leftover = iter(b for b in range(len(colors)) if b not in set(pairs.values()))
        chosen = [colors[pairs[a]] if a in pairs else colors[next(leftover)] for a in range(len(nbrs))]
    mapping = {y: new_color}
    mapping.update(zip(nbrs, chosen))
    return state.coloring.updated(mapping)


@dataclass
class StepRecord:
    color: int
    vertex: int
    kind: str
    sizes: dict[str, int] = field(default_factory=dict)
    rotations: list[dict[str, Any]] = field(default_factory=list)
    loops_initial: int | None = None
    matching_case: int | None = None
    reserved: tuple[int, int] | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "color": self.color,
            "vertex": self.vertex,
            "kind": self.kind,
            "sizes": self.sizes,
            "rotations": self.rotations,
        }
        if self.loops_initial is not None:
            out["loops_initial"] = self.loops_initial
        if self.matching_case is not None:
            out["matching_case"] = self.matching_case
        if self.reserved is not None:
            out["reserved"] = list(self.reserved)
        return out


def _merge(state: ExtensionState, y: int, coloring: Coloring, checks: CheckLog) -> ExtensionState:
    new = ExtensionState(
        state.g, state.d, state.k + 1, state.dominants + [(y, state.k + 1)], coloring, state.extended + 1
    )
    new.check(checks)
    return new


def _adopt(state: ExtensionState, checks: CheckLog) -> tuple[ExtensionState, StepRecord] | None:
    # Fallback when no vertex is eligible: reuse an already-colored vertex of
    # the next color whose whole neighborhood is colored and sees every other color.
    color = state.k + 1
    taken = {v for v, _ in state.dominants}
    for v in range(state.g.n):
        if state.coloring[v] != color or v in taken:
            continue
        seen = [state.coloring[u] for u in state.g.adj[v]]
        if None in seen:
            continue
        if all(j in seen for j in range(1, state.d + 2) if j != color):
            new = ExtensionState(
                state.g, state.d, state.k + 1, state.dominants + [(v, color)], state.coloring, state.extended
            )
            new.check(checks)
            return new, StepRecord(color, v, "adopted")
    return None


def extend_once(
    state: ExtensionState,
    mode: Mode | str,
    checks: CheckLog | None = None,
    f_init: FInit | str = FInit.MATCHING,
    rng: random.Random | None = None,
) -> tuple[ExtensionState, StepRecord]:
    """Add a dominant vertex of color k+1 using loop-raising rotations."""
    checks = CheckLog() if checks is None else checks
    if state.k > state.d:
        raise ValueError("all d+1 colors already have dominant vertices")
    cls = classify(state, mode, checks)
    if not cls.eligible:
        adopted = _adopt(state, checks)
        if adopted is not None:
            adopted[1].sizes = cls.sizes()
            return adopted
    y = select_candidate(cls, state, checks)
    F = [y, *state.g.adj[y]]
    K = cls.C
    c = initial_f_coloring(state, y, f_init, rng)
    loops0 = build_digraph(state.g, K, F, c).loop_count()
    try:
        result = saturate_loops(state.g, K, F, c, pinned=state.k + 1)
    except NoCircuit as exc:
        raise StepCircuitFailure(
            str(exc), {"sizes": cls.sizes(), "vertex": y, "color": exc.color, "digraph_dot": exc.digraph.to_dot()}
        ) from exc
    for r in result.rotations:
        checks.require("rotation.loops_increase", r.loops_after > r.loops_before, f"{r}")
    record = StepRecord(
        state.k + 1,
        y,
        "rotation",
        cls.sizes(),
        [{"circuit": r.circuit, "loops_before": r.loops_before, "loops_after": r.loops_after} for r in result.rotations],
        loops_initial=loops0,
    )
    return _merge(state, y, result.coloring, checks), record


def extend_once_matching(
    state: ExtensionState, checks: CheckLog | None = None
) -> tuple[ExtensionState, StepRecord]:
    """Add a dominant vertex of color k+1 by the matching construction (C4-free graphs).

    The neighbors of ``y`` split into ``B`` (at most two neighbors in ``C``)
    and ``T`` (at least three). The color most often blocked on ``B`` may
    be reserved for one vertex ``w1``; ``T`` is colored greedily; the
    rest of ``B`` is matched to the leftover colors.
    """
    checks = CheckLog() if checks is None else checks
    g, d, k = state.g, state.d, state.k
    if k > d:
        raise ValueError("all d+1 colors already have dominant vertices")
    cls = classify_matching(state, checks)
    if not cls.eligible:
        adopted = _adopt(state, checks)
        if adopted is not None:
            adopted[1].sizes = cls.sizes()
            return adopted
    y = select_candidate(cls, state, checks)
    new_color = k + 1
    palette = [j for j in range(1, d + 2) if j != new_color]
    nbrs = list(g.adj[y])
    low = cls.levels[0] | cls.levels[1] | (cls.levels[2] if d >= 2 else set())
    B = [w for w in nbrs if w in low]
    T = [w for w in nbrs if w not in low]
    blocked = {w: _blocked_colors(state, w) for w in nbrs}
    checks_on = state.adopted == 0 and d >= 4
    if checks_on:
        checks.require("matching.no_R_c", all(w in cls.ranges["R_b"] for w in T), f"vertex {y}")
        for j in palette:
            e_all = sum(blocked[w].count(j) for w in nbrs)
            checks.require("matching.star", e_all <= d - 1, f"e(C_{j}, N({y})) = {e_all}")
    touched = [w for w in B if w not in cls.levels[0]]
    hits = {j: sum(1 for w in B if j in blocked[w]) for j in palette}
    top = max(palette, key=lambda j: (hits[j], -j))
    w1: int | None = None
    if hits[top] >= len(touched):
        case = 1
        free = [w for w in T if top not in blocked[w]] or [w for w in B if w in cls.levels[0]]
        if not free:
            raise NoPerfectMatching(f"case 1: no neighbor of {y} can take color {top}", {"vertex": y})
        w1 = free[0]
    elif hits[top] == len(touched) - 1:
        case = 2
        w1 = next(w for w in touched if top not in blocked[w])
    else:
        case = 3
    assignment = {y: new_color}
    if w1 is not None:
        assignment[w1] = top
    rest = [j for j in palette if j != top]
    for u in T:
        if u == w1:
            continue
        j = next((j for j in rest if j not in blocked[u] and j not in assignment.values()), None)
        if j is None:
            raise NoPerfectMatching(f"no free color for {u} in the neighborhood of {y}", {"vertex": y})
        assignment[u] = j
    left = [w for w in B if w != w1]
    spare = [j for j in palette if j not in assignment.values()]
    t = len(left)
    checks.require("matching.sides", t == len(spare), f"{t} vertices vs {len(spare)} colors")
    h = BipartiteGraph.from_edges(
        t, t, [(a, b) for a, w in enumerate(left) for b, j in enumerate(spare) if j not in blocked[w]]
    )
    if checks_on and t >= 2:
        checks.require("perfect_matching.degree_vertex", all(len(r) >= t - 2 for r in h.left_adj), f"H={sorted(h.edges)}")
        checks.require("perfect_matching.degree_color", all(len(col) >= 2 for col in h.right_adj), f"H={sorted(h.edges)}")
    try:
        pairs = perfect_matching(h)
    except MatchingError as exc:
        raise NoPerfectMatching(
            str(exc), {"vertex": y, "vertices": left, "colors": spare, "edges": sorted(h.edges)}
        ) from exc
    checks["perfect_matching.precondition"] += 1
    for a, b in pairs:
        assignment[left[a]] = spare[b]
    for w in nbrs:
        checks.require(
            "matching.boundary", assignment[w] not in blocked[w], f"vertex {w} got blocked color {assignment[w]}"
        )
    record = StepRecord(
        new_color, y, "matching", cls.sizes(), matching_case=case, reserved=None if w1 is None else (w1, top)
    )
    return _merge(state, y, state.coloring.updated(assignment), checks), record


@dataclass
class SolveResult:
    coloring: Coloring
    dominants: list[tuple[int, int]]
    verdict: BVerdict
    steps: list[StepRecord]
    checks: CheckLog
    warnings: list[str]
    seconds: float

    @property
    def rotations(self) -> int:
        return sum(len(s.rotations) for s in self.steps)


def _size_warnings(g: Graph, d: int, mode: Mode) -> list[str]:
    out = []
    if mode is Mode.C4FREE:
        if has_c4(g):
            out.append("c4free mode on a graph that contains a 4-cycle")
        if g.n < c4free_bound(d):
            out.append(f"n={g.n} is below d^3+d={c4free_bound(d)}")
    elif g.n < general_bound(d):
        out.append(f"n={g.n} is below 2d^3+2d-2d^2={general_bound(d)}")
    return out


def solve_b_coloring(
    g: Graph,
    mode: Mode | str = Mode.GENERAL,
    strategy: Strategy | str = Strategy.ROTATION,
    f_init: FInit | str = FInit.MATCHING,
    seed: int = 0,
) -> SolveResult:
    """Build and verify a b-coloring of a d-regular graph with d+1 colors.

    Raises SolveError (with a replayable snapshot) if any step fails, and
    ValueError on unusable input (non-regular graph, unsupported degree).
    """
    mode, strategy, f_init = Mode(mode), Strategy(strategy), FInit(f_init)
    d = degree_if_regular(g)
    if d is None:
        raise ValueError("graph is not regular")
    if mode is Mode.C4FREE and d < 4:
        raise ValueError("c4free mode needs d >= 4")
    if strategy is Strategy.MATCHING and mode is not Mode.C4FREE:
        raise ValueError("the matching strategy is only available in c4free mode")
    warnings = _size_warnings(g, d, mode)
    for w in warnings:
        log.warning(w)
    start = time.perf_counter()
    checks = CheckLog()
    rng = random.Random(seed)
    state = init_state(g)
    steps: list[StepRecord] = []
    try:
        while state.k <= d:
            if strategy is Strategy.MATCHING:
                state, record = extend_once_matching(state, checks)
            else:
                state, record = extend_once(state, mode, checks, f_init, rng)
            steps.append(record)
        coloring = greedy_complete(g, state.coloring)
    except (ExtensionError, MatchingError) as exc:
        snapshot = {
            "graph": {"n": g.n, "edges": [list(e) for e in g.edges()]},
            "mode": mode.value,
            "strategy": strategy.value,
            "f_init": f_init.value,
            "seed": seed,
            "error_type": type(exc).__name__,
            "error": str(exc),
            "details": getattr(exc, "details", {}),
            "state": state.to_dict(),
            "steps": [s.to_dict() for s in steps],
        }
        raise SolveError(f"step for color {state.k + 1} failed: {exc}", snapshot, exc) from exc
    verdict = verify_b_coloring(g, coloring, d + 1)
    if not verdict.is_b_coloring:
        snapshot = {"graph": {"n": g.n, "edges": [list(e) for e in g.edges()]}, "verdict": verdict.to_dict()}
        raise SolveError("final coloring failed verification", snapshot, RuntimeError("verification"))
    for v, col in state.dominants:
        checks.require("final.dominant", v in verdict.dominant_by_color[col], f"vertex {v} color {col}")
    return SolveResult(
        coloring, state.dominants, verdict, steps, checks, warnings, time.perf_counter() - start
    )
