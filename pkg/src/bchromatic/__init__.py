"""Constructive b-colorings with d+1 colors for d-regular graphs."""

from bchromatic.coloring import BVerdict, Coloring, check_proper, dominant_vertices, greedy_complete, verify_b_coloring
from bchromatic.exact import ExactResult, exact_b_chromatic, exists_b_coloring
from bchromatic.extension import Mode, SolveResult, Strategy, solve_b_coloring
from bchromatic.graph import (
    Graph,
    degree_if_regular,
    gen_random_regular,
    gen_random_regular_c4free,
    girth,
    has_c4,
    named_graph,
    parse_dimacs,
    write_dimacs,
)

__all__ = [
    "BVerdict",
    "Coloring",
    "ExactResult",
    "Graph",
    "Mode",
    "SolveResult",
    "Strategy",
    "check_proper",
    "degree_if_regular",
    "dominant_vertices",
    "exact_b_chromatic",
    "exists_b_coloring",
    "gen_random_regular",
    "gen_random_regular_c4free",
    "girth",
    "greedy_complete",
    "has_c4",
    "named_graph",
    "parse_dimacs",
    "solve_b_coloring",
    "verify_b_coloring",
    "write_dimacs",
]
