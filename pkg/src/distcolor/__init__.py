"""Proper distinguishing colorings for connected graphs of girth at least five.

A proper coloring is distinguishing when the identity is the only color
preserving automorphism.  ``solve`` builds one with at most one color more
than the maximum degree (the six-cycle alone needs ``solve_c6_extension``),
``color_delta_plus_2`` and ``list_color_delta_plus_2`` trade one extra color
for a much simpler construction, and every returned coloring is certified by
an exact automorphism search before it reaches the caller.
"""

from .coloring import Coloring, ListAssignment, parse_coloring, render_coloring
from .errors import (
    DimacsError,
    DistcolorError,
    InternalConsistencyError,
    PaletteExhaustedError,
    PreconditionError,
    PropernessError,
    SearchBoundError,
    TreeConstraintError,
)
from .generators import generate
from .graph import Graph, diameter, girth, is_connected, parse_graph, render_graph
from .greedy import color_delta_plus_2, greedy_extend, list_color_delta_plus_2
from .solver import (
    SolveResult,
    is_c6,
    render_result,
    solve,
    solve_c6_extension,
)
from .symmetry import (
    Permutation,
    SymmetryVerdict,
    automorphisms,
    exact_chi_D,
    find_isomorphism,
    fixed_propagation,
    is_distinguishing,
)
from .tree import BfsTree, bfs_tree

__all__ = [
    "BfsTree",
    "Coloring",
    "DimacsError",
    "DistcolorError",
    "Graph",
    "InternalConsistencyError",
    "ListAssignment",
    "PaletteExhaustedError",
    "Permutation",
    "PreconditionError",
    "PropernessError",
    "SearchBoundError",
    "SolveResult",
    "SymmetryVerdict",
    "TreeConstraintError",
    "automorphisms",
    "bfs_tree",
    "color_delta_plus_2",
    "diameter",
    "exact_chi_D",
    "find_isomorphism",
    "fixed_propagation",
    "generate",
    "girth",
    "greedy_extend",
    "is_c6",
    "is_connected",
    "is_distinguishing",
    "list_color_delta_plus_2",
    "parse_coloring",
    "parse_graph",
    "render_coloring",
    "render_graph",
    "render_result",
    "solve",
    "solve_c6_extension",
]
