"""Distinguishing proper colorings within one color of the maximum degree.

``solve`` covers every connected graph of girth at least five except the
six-cycle, which needs a fourth color and has its own entry point. The
dispatcher walks a fixed sequence of structural cases; each case pins a BFS
tree, precolors a short prefix, overrides a handful of vertices and lets the
greedy rules do the rest. Every result is certified by the exact symmetry
search before it is returned, and an uncertifiable coloring is reported as an
internal bug rather than a user error.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .coloring import Coloring, render_coloring
from .errors import InternalConsistencyError, PreconditionError
from .graph import Graph, diameter, distances, girth, is_connected
from .greedy import Chooser, greedy_extend
from .symmetry import (
    exists_automorphism_mapping,
    find_isomorphism,
    fixed_propagation,
    is_distinguishing,
)
from .tree import LAST, BfsTree, bfs_tree

BRANCH_PATH_OR_CYCLE = "path_or_cycle"
BRANCH_NONREGULAR = "nonregular"
BRANCH_GEODESIC = "geodesic"
BRANCH_DIAMETER3 = "diameter3"
BRANCH_MOORE = "moore_recursive"
BRANCH_DISSIMILAR = "dissimilar_neighbors"
BRANCH_SPECIAL = "special"
BRANCH_C6 = "c6"


@dataclass(frozen=True)
class GeodesicConfig:
    """A geodesic w-x1-x2-x3 whose endpoint x3 has a neighbor x also far from w."""

    w: int
    x1: int
    x2: int
    x3: int
    x: int


@dataclass(frozen=True)
class DiameterThreeConfig:
    """Three length-3 paths from w to z3 through distinct middle vertices."""

    w: int
    x1: int
    x2: int
    y1: int
    y2: int
    z1: int
    z2: int
    z3: int


@dataclass(frozen=True)
class SolveResult:
    """A certified coloring plus the construction it came from.

    ``prefix`` is a sigma-prefix of ``tree`` from which fixed_propagation
    certifies every vertex; ``certified`` is always True on a returned result.
    """

    coloring: Coloring
    colors_used: int
    branch: str
    certified: bool
    tree: BfsTree
    prefix: tuple[int, ...]


def render_result(result: SolveResult) -> str:
    header = (
        f"c branch={result.branch} colors={result.colors_used}"
        f" certified={int(result.certified)}"
    )
    return header + "\n" + render_coloring(result.coloring)


# The two cubic graphs that fall through to canned colorings: a 9-cycle with
# three long chords and a hub on the remaining triple, and a 14-cycle with a
# chord out of every second vertex.
_PETERSEN_EDGES = (
    [(i, (i + 1) % 9) for i in range(9)]
    + [(0, 4), (3, 7), (6, 1), (9, 2), (9, 5), (9, 8)]
)
_PETERSEN_COLORS = (2, 1, 2, 4, 3, 2, 4, 2, 3, 1)
_HEAWOOD_EDGES = (
    [(i, (i + 1) % 14) for i in range(14)]
    + [(i, (i + 5) % 14) for i in range(1, 14, 2)]
)
_HEAWOOD_COLORS = (2, 3, 2, 3, 2, 1, 2, 1, 4, 3, 2, 1, 2, 4)


def special_colorings() -> tuple[tuple[str, Graph, Coloring], ...]:
    """The stored four-colorings behind the special branch, with their graphs."""
    return (
        ("petersen", Graph(10, _PETERSEN_EDGES), Coloring(_PETERSEN_COLORS, 4)),
        ("heawood", Graph(14, _HEAWOOD_EDGES), Coloring(_HEAWOOD_COLORS, 4)),
    )


def _validate(g: Graph) -> None:
    if g.n == 0:
        raise PreconditionError("graph has no vertices")
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
    if girth(g) < 5:
        raise PreconditionError("girth must be at least five")


def is_c6(g: Graph) -> bool:
    """True when g is a six-cycle, the one graph solve refuses."""
    return (
        g.n == 6
        and all(g.degree(v) == 2 for v in g.vertices())
        and is_connected(g)
    )


def _minimal_certifying_prefix(
    g: Graph, tree: BfsTree, coloring: Coloring
) -> tuple[int, ...]:
    for end in range(1, g.n + 1):
        prefix = tree.order[:end]
        if len(fixed_propagation(g, tree, coloring, prefix)) == g.n:
            return tuple(prefix)
    raise InternalConsistencyError("no prefix certifies the coloring")


def _verified_result(
    g: Graph,
    tree: BfsTree,
    coloring: Coloring,
    branch: str,
    prefix: tuple[int, ...] | None = None,
) -> SolveResult:
    """Certify with the exact search, then pin down the fixed prefix.

    With no stated prefix the shortest certifying one is computed; a stated
    prefix must let propagation certify every vertex.
    """
    verdict = is_distinguishing(g, coloring)
    if not verdict.distinguishing:
        raise InternalConsistencyError(
            f"{branch} produced a coloring preserved by a non-identity automorphism"
        )
    if prefix is None:
        prefix = _minimal_certifying_prefix(g, tree, coloring)
    else:
        prefix = tuple(prefix)
        if len(fixed_propagation(g, tree, coloring, prefix)) != g.n:
            raise InternalConsistencyError(
                f"{branch}: propagation from the stated prefix left vertices uncertified"
            )
    return SolveResult(coloring, coloring.num_colors(), branch, True, tree, prefix)


def _walk_from(g: Graph, start: int) -> list[int]:
    """Vertex sequence along a path or cycle, starting toward the smaller id."""
    order = [start]
    prev = None
    v = start
    while len(order) < g.n:
        step = [u for u in g.adj[v] if u != prev]
        if not step:
            break
        prev, v = v, min(step)
        order.append(v)
    return order


def _path_or_cycle_parts(g: Graph) -> tuple[BfsTree, Coloring]:
    _validate(g)
    if g.max_degree() > 2:
        raise PreconditionError("maximum degree exceeds two")
    values: list[int | None] = [None] * g.n
    ends = [v for v in g.vertices() if g.degree(v) <= 1]
    if ends:
        order = _walk_from(g, min(ends))
        if len(order) != g.n:
            raise PreconditionError("graph is not a path")
        for idx, v in enumerate(order):
            values[v] = 1 if idx == 0 else (2 if idx % 2 == 1 else 3)
    else:
        if is_c6(g):
            raise PreconditionError(
                "the six-cycle needs four colors; use solve_c6_extension"
            )
        order = _walk_from(g, 0)
        head = (1, 2, 3, 1, 2)
        for idx, v in enumerate(order):
            values[v] = head[idx] if idx < 5 else (3 if idx % 2 == 1 else 2)
    coloring = Coloring(values, max(c for c in values if c is not None))
    return bfs_tree(g, order[0]), coloring


def color_path_or_cycle(g: Graph) -> Coloring:
    """One end 1 then 2,3 alternating; cycles open 1,2,3,1,2 then alternate."""
    tree, coloring = _path_or_cycle_parts(g)
    _verified_result(g, tree, coloring, BRANCH_PATH_OR_CYCLE)
    return coloring


def _nonregular_parts(g: Graph, w: int) -> tuple[BfsTree, Coloring, tuple[int, ...]]:
    _validate(g)
    delta = g.max_degree()
    if not 0 <= w < g.n:
        raise PreconditionError(f"vertex {w} out of range")
    if g.degree(w) >= delta:
        raise PreconditionError(f"vertex {w} already has the maximum degree {delta}")
    tree = bfs_tree(g, w)
    coloring = greedy_extend(g, tree, {w: delta + 1}, k=delta + 1)
    return tree, coloring, (w,)


def color_nonregular(g: Graph, w: int) -> Coloring:
    """Root the tree at a vertex of deficient degree and give it the top color.

    No other vertex of degree below the maximum can reach the top color under
    the greedy rules, which pins w; the rest follows from the tree structure.
    """
    tree, coloring, prefix = _nonregular_parts(g, w)
    _verified_result(g, tree, coloring, BRANCH_NONREGULAR, prefix)
    return coloring


def _neighborhood_split_chooser(
    g: Graph, tree: BfsTree, hub: int, anchor: int, avoid: int | None = None
) -> Chooser:
    """Chooser keeping hub's neighborhood color multiset distinct from anchor's.

    When the vertex has no colored neighbor besides its parent the pool also
    excludes the colors of its siblings, preserving their pairwise-distinct
    pattern. Two candidates always survive that cut, and at most one of them
    can equalize the two neighborhood multisets. ``avoid`` names a color to
    dodge when any other candidate works.
    """

    def choose(v: int, candidates: tuple[int, ...], values: tuple[int | None, ...]) -> int:
        pool = list(candidates)
        parent = tree.parent[v]
        if not any(values[u] is not None for u in g.adj[v] if u != parent):
            taken = {values[u] for u in tree.siblings(v)} - {None}
            pool = [c for c in pool if c not in taken]
        if len(pool) < 2:
            raise InternalConsistencyError(
                f"vertex {v} should have at least two color options, has {pool}"
            )
        rest = [values[u] for u in g.adj[hub] if u != v]
        anchor_colors = [values[u] for u in g.adj[anchor]]
        if None in rest or None in anchor_colors:
            raise InternalConsistencyError(
                "the compared neighborhoods are not fully colored"
            )
        target = sorted(anchor_colors)
        ok = [c for c in pool if sorted(rest + [c]) != target]
        if not ok:
            raise InternalConsistencyError(
                f"no candidate color separates vertices {hub} and {anchor}"
            )
        if avoid is not None:
            preferred = [c for c in ok if c != avoid]
            if preferred:
                return min(preferred)
        return min(ok)

    return choose


def find_geodesic_config(g: Graph) -> GeodesicConfig | None:
    """First (smallest root, then smallest pair) geodesic configuration, if any."""
    _validate(g)
    for w in g.vertices():
        dist = distances(g, w)
        pairs = [
            (x3, x)
            for x3 in g.vertices()
            if dist[x3] == 3
            for x in g.adj[x3]
            if dist[x] >= 3
        ]
        if not pairs:
            continue
        x3, x = min(pairs)
        x2 = min(u for u in g.adj[x3] if dist[u] == 2)
        x1 = min(u for u in g.adj[x2] if dist[u] == 1)
        return GeodesicConfig(w, x1, x2, x3, x)
    return None


def _check_geodesic_config(g: Graph, cfg: GeodesicConfig) -> list[int | float]:
    for u, v in ((cfg.w, cfg.x1), (cfg.x1, cfg.x2), (cfg.x2, cfg.x3), (cfg.x3, cfg.x)):
        if not g.has_edge(u, v):
            raise PreconditionError(f"configuration edge {u}-{v} is missing")
    dist = distances(g, cfg.w)
    for vertex, want in ((cfg.x1, 1), (cfg.x2, 2), (cfg.x3, 3)):
        if dist[vertex] != want:
            raise PreconditionError(
                f"vertex {vertex} is at distance {dist[vertex]} from {cfg.w}, not {want}"
            )
    if dist[cfg.x] < 3:
        raise PreconditionError(f"vertex {cfg.x} is too close to {cfg.w}")
    return dist


def _geodesic_parts(
    g: Graph, cfg: GeodesicConfig
) -> tuple[BfsTree, Coloring, tuple[int, ...]]:
    _validate(g)
    delta = g.max_degree()
    if delta < 3:
        raise PreconditionError("maximum degree must be at least three")
    dist = _check_geodesic_config(g, cfg)
    w, x1, x2, x3 = cfg.w, cfg.x1, cfg.x2, cfg.x3
    if g.degree(w) < 2:
        raise PreconditionError(f"root {w} needs a second neighbor")
    y1 = min(u for u in g.adj[w] if u != x1)
    # x2 first at level 2 and x3 the last of its children, with every level-3
    # neighbor of x2 pulled into that child group: when x3's turn comes, all
    # other neighbors of x2 are colored and x3's far neighbor x is not.
    parents = {u: x2 for u in g.adj[x2] if dist[u] == 3}
    slots: dict[int, int | str] = {x1: 0, y1: 1, x2: 0, x3: LAST}
    tree = bfs_tree(g, w, parents=parents, slots=slots)
    k = delta + 1
    chooser = _neighborhood_split_chooser(g, tree, hub=x2, anchor=w)
    coloring = greedy_extend(
        g,
        tree,
        {w: k},
        k=k,
        forced={x1: 1, y1: 1, x2: k},
        choosers={x3: chooser},
    )
    prefix = tuple(tree.order[: tree.position(x2) + 1])
    return tree, coloring, prefix


def color_geodesic(g: Graph, cfg: GeodesicConfig) -> Coloring:
    """Top color on w and x2, 1 on their first children; x3 splits the pair.

    The two top-colored vertices are the only ones that can carry a repeated
    color in their neighborhood, and x3's chosen color makes those two
    neighborhood multisets differ.
    """
    tree, coloring, prefix = _geodesic_parts(g, cfg)
    _verified_result(g, tree, coloring, BRANCH_GEODESIC, prefix)
    return coloring


def _diam3_configs(g: Graph):
    """Yield admissible diameter-three configurations, most-canonical first."""
    for w in g.vertices():
        dist = distances(g, w)
        for z3 in (v for v in g.vertices() if dist[v] == 3):
            nbrs = g.adj[z3]
            if any(dist[u] != 2 for u in nbrs):
                continue
            for z2, x2, y2 in permutations(sorted(nbrs), 3):
                z1 = min(u for u in g.adj[z2] if dist[u] == 1)
                x1 = min(u for u in g.adj[x2] if dist[u] == 1)
                y1 = min(u for u in g.adj[y2] if dist[u] == 1)
                if len({x1, y1, z1}) != 3:
                    continue
                yield DiameterThreeConfig(w, x1, x2, y1, y2, z1, z2, z3)


def find_diam3_config(g: Graph) -> DiameterThreeConfig | None:
    _validate(g)
    if g.max_degree() < 4:
        raise PreconditionError("maximum degree must be at least four")
    if diameter(g) != 3:
        raise PreconditionError("diameter must be exactly three")
    return next(_diam3_configs(g), None)


def _check_diam3_config(g: Graph, cfg: DiameterThreeConfig) -> list[int | float]:
    w = cfg.w
    for path in (
        (w, cfg.x1, cfg.x2, cfg.z3),
        (w, cfg.y1, cfg.y2, cfg.z3),
        (w, cfg.z1, cfg.z2, cfg.z3),
    ):
        for u, v in zip(path, path[1:]):
            if not g.has_edge(u, v):
                raise PreconditionError(f"configuration edge {u}-{v} is missing")
    middle = (cfg.x1, cfg.x2, cfg.y1, cfg.y2, cfg.z1, cfg.z2)
    if len(set(middle)) != 6:
        raise PreconditionError("configuration vertices are not pairwise distinct")
    dist = distances(g, w)
    for vertex, want in zip(middle + (cfg.z3,), (1, 2, 1, 2, 1, 2, 3)):
        if dist[vertex] != want:
            raise PreconditionError(
                f"vertex {vertex} is at distance {dist[vertex]} from {w}, not {want}"
            )
    if any(dist[u] != 2 for u in g.adj[cfg.z3]):
        raise PreconditionError("some neighbor of z3 is not at level 2")
    return dist


def _diam3_parts(
    g: Graph, cfg: DiameterThreeConfig
) -> tuple[BfsTree, Coloring, tuple[int, ...]]:
    _validate(g)
    delta = g.max_degree()
    if delta < 4:
        raise PreconditionError("maximum degree must be at least four")
    dist = _check_diam3_config(g, cfg)
    w, x1, x2, y1, y2, z1, z2, z3 = (
        cfg.w, cfg.x1, cfg.x2, cfg.y1, cfg.y2, cfg.z1, cfg.z2, cfg.z3,
    )
    children_x1 = [u for u in g.adj[x1] if dist[u] == 2]
    children_y1 = [u for u in g.adj[y1] if dist[u] == 2]
    children_z1 = [u for u in g.adj[z1] if dist[u] == 2]
    # First children chosen away from the key vertices: f_y keeps color 1 off
    # z2's earlier-colored neighborhood, f_x keeps 3 available at y2's turn.
    # Each exists: at least three candidates, at most one disqualified.
    f_x = min(
        (u for u in children_x1 if u != x2 and not g.has_edge(u, y2)),
        default=None,
    )
    f_y = min(
        (u for u in children_y1 if u != y2 and not g.has_edge(u, z2)),
        default=None,
    )
    if f_x is None or f_y is None:
        raise InternalConsistencyError("no admissible first child beside the spine")
    parents = {u: z2 for u in g.adj[z2] if dist[u] == 3}
    slots: dict[int, int | str] = {
        x1: 0, y1: 1, z1: 2,
        f_x: 0, x2: 1,
        f_y: 0, y2: 1,
        z2: 0, z3: LAST,
    }
    tree = bfs_tree(g, w, parents=parents, slots=slots)
    forbidden: dict[int, set[int]] = {}
    for u in children_x1:
        if u != x2:
            forbidden[u] = {1}
    for u in children_z1:
        if u != z2:
            forbidden[u] = {1}
    for u in children_y1:
        if u != y2 and g.has_edge(u, z2):
            forbidden[u] = {1}
    forced = {x1: delta + 1, z1: delta + 1, z2: 1, x2: 3, y2: 3}
    chooser = _neighborhood_split_chooser(g, tree, hub=z2, anchor=w, avoid=delta + 1)
    coloring = greedy_extend(
        g,
        tree,
        {w: 1},
        k=delta + 1,
        forced=forced,
        forbidden=forbidden,
        choosers={z3: chooser},
    )
    prefix = tuple(tree.order[: tree.position(z2) + 1])
    return tree, coloring, prefix


def color_diameter3(g: Graph, cfg: DiameterThreeConfig) -> Coloring:
    """Two top-colored spine vertices over a shared 1-colored pair.

    z1 ends up the only top-colored vertex with two neighbors colored 1 (w and
    z2), z3's color separates those two by neighborhood multiset, and the
    forbidden-1 rules keep every competing child distinct.
    """
    if diameter(g) != 3:
        raise PreconditionError("diameter must be exactly three")
    tree, coloring, prefix = _diam3_parts(g, cfg)
    _verified_result(g, tree, coloring, BRANCH_DIAMETER3, prefix)
    return coloring


def _solve_diameter3(g: Graph) -> SolveResult:
    failures: list[Exception] = []
    for cfg in _diam3_configs(g):
        try:
            tree, coloring, prefix = _diam3_parts(g, cfg)
            return _verified_result(g, tree, coloring, BRANCH_DIAMETER3, prefix)
        except (PreconditionError, InternalConsistencyError) as err:
            failures.append(err)
    detail = f"; last failure: {failures[-1]}" if failures else ""
    raise InternalConsistencyError(
        "every diameter-three configuration failed" + detail
    )


def _moore_parts(g: Graph, w: int) -> tuple[BfsTree, Coloring]:
    _validate(g)
    delta = g.max_degree()
    if delta < 4:
        raise PreconditionError("maximum degree must be at least four")
    if any(g.degree(v) != delta for v in g.vertices()):
        raise PreconditionError("graph must be regular")
    if diameter(g) != 2:
        raise PreconditionError("diameter must be two")
    if not 0 <= w < g.n:
        raise PreconditionError(f"vertex {w} out of range")
    if g.n != delta * delta + 1:
        raise InternalConsistencyError(
            "vertex count contradicts regular girth-five diameter-two structure"
        )
    keep = sorted(set(g.vertices()) - {w} - set(g.adj[w]))
    sub, old_to_new = g.induced_subgraph(keep)
    if not is_connected(sub):
        raise InternalConsistencyError(
            "removing a closed neighborhood disconnected the graph"
        )
    if any(sub.degree(v) != delta - 1 for v in sub.vertices()):
        raise InternalConsistencyError("reduced graph is not regular one degree down")
    inner = solve(sub)
    if inner.coloring.max_color() > delta:
        raise InternalConsistencyError("recursive coloring exceeded its palette")
    values: list[int | None] = [None] * g.n
    for old in keep:
        values[old] = inner.coloring.values[old_to_new[old]]
    for u in g.adj[w]:
        values[u] = delta + 1
    values[w] = 1
    return bfs_tree(g, w), Coloring(values, delta + 1)


def color_moore_recursive(g: Graph, w: int) -> Coloring:
    """Solve the graph minus w's closed neighborhood, then paint that collar.

    The collar N(w) takes the top color, which the recursive coloring never
    uses; w is then the only vertex with two top-colored neighbors, and each
    collar vertex is the sole common neighbor of any two of its fixed ones.
    """
    tree, coloring = _moore_parts(g, w)
    _verified_result(g, tree, coloring, BRANCH_MOORE)
    return coloring


def _dissimilar_parts(
    g: Graph, w: int, x1: int, y1: int
) -> tuple[BfsTree, Coloring, tuple[int, ...]]:
    _validate(g)
    if len({w, x1, y1}) != 3:
        raise PreconditionError("w, x1, y1 must be three distinct vertices")
    for u in (x1, y1):
        if not g.has_edge(w, u):
            raise PreconditionError(f"vertex {u} is not a neighbor of {w}")
    if exists_automorphism_mapping(g, x1, y1):
        raise PreconditionError(f"an automorphism maps {x1} to {y1}")
    delta = g.max_degree()
    k = delta + 1
    tree = bfs_tree(g, w, slots={x1: 0, y1: 1})
    coloring = greedy_extend(g, tree, {w: k}, k=k, forced={x1: 1, y1: 1})
    return tree, coloring, tuple(tree.order[:3])


def color_dissimilar_neighbors(g: Graph, w: int, x1: int, y1: int) -> Coloring:
    """Give two structurally different neighbors of w the same color 1.

    w is the only top-colored vertex with two 1-colored neighbors, and no
    automorphism can swap x1 with y1, so all three are fixed outright.
    """
    tree, coloring, prefix = _dissimilar_parts(g, w, x1, y1)
    _verified_result(g, tree, coloring, BRANCH_DISSIMILAR, prefix)
    return coloring


def _special_parts(g: Graph) -> tuple[BfsTree, Coloring]:
    _validate(g)
    for edges, colors in (
        (_PETERSEN_EDGES, _PETERSEN_COLORS),
        (_HEAWOOD_EDGES, _HEAWOOD_COLORS),
    ):
        if g.n != len(colors):
            continue
        iso = find_isomorphism(g, Graph(len(colors), edges))
        if iso is None:
            continue
        values = [colors[iso(v)] for v in g.vertices()]
        return bfs_tree(g, 0), Coloring(values, max(colors))
    raise PreconditionError(
        "graph is neither the Petersen graph nor the Heawood graph"
    )


def color_special(g: Graph) -> Coloring:
    """Transport a fixed four-coloring onto the input through an isomorphism."""
    tree, coloring = _special_parts(g)
    _verified_result(g, tree, coloring, BRANCH_SPECIAL)
    return coloring


def _find_dissimilar_pair(g: Graph) -> tuple[int, int, int] | None:
    for w in g.vertices():
        nbrs = g.adj[w]
        for i, x1 in enumerate(nbrs):
            for y1 in nbrs[i + 1:]:
                if not exists_automorphism_mapping(g, x1, y1):
                    return w, x1, y1
    return None


def solve(g: Graph) -> SolveResult:
    """Certified proper distinguishing coloring with at most Δ+1 colors.

    Cases, tried in order: paths and cycles; a vertex of deficient degree;
    a geodesic configuration; regular of diameter 3 (Δ ≥ 4); regular of
    diameter 2 (Δ ≥ 4, handled recursively); and the cubic leftovers, where
    either some neighbor pair is dissimilar or the graph is one of the two
    with a canned coloring.
    """
    _validate(g)
    if is_c6(g):
        raise PreconditionError(
            "the six-cycle needs four colors; use solve_c6_extension"
        )
    delta = g.max_degree()
    if delta <= 2:
        tree, coloring = _path_or_cycle_parts(g)
        return _verified_result(g, tree, coloring, BRANCH_PATH_OR_CYCLE)
    low = [v for v in g.vertices() if g.degree(v) < delta]
    if low:
        tree, coloring, prefix = _nonregular_parts(g, min(low))
        return _verified_result(g, tree, coloring, BRANCH_NONREGULAR, prefix)
    cfg = find_geodesic_config(g)
    if cfg is not None:
        tree, coloring, prefix = _geodesic_parts(g, cfg)
        return _verified_result(g, tree, coloring, BRANCH_GEODESIC, prefix)
    diam = diameter(g)
    if delta >= 4 and diam == 3:
        return _solve_diameter3(g)
    if delta >= 4 and diam == 2:
        tree, coloring = _moore_parts(g, 0)
        return _verified_result(g, tree, coloring, BRANCH_MOORE)
    if delta == 3:
        if g.n > 14:
            raise InternalConsistencyError(
                "cubic graph too large for the remaining cases"
            )
        pair = _find_dissimilar_pair(g)
        if pair is not None:
            tree, coloring, prefix = _dissimilar_parts(g, *pair)
            return _verified_result(g, tree, coloring, BRANCH_DISSIMILAR, prefix)
        tree, coloring = _special_parts(g)
        return _verified_result(g, tree, coloring, BRANCH_SPECIAL)
    raise InternalConsistencyError("dispatcher found no applicable case")


def solve_c6_extension(g: Graph) -> SolveResult:
    """Four colors for the six-cycle: 1,2,3,1,2,4 around the cycle."""
    if g.n != 6 or not is_connected(g) or not is_c6(g):
        raise PreconditionError("input is not a six-cycle")
    order = _walk_from(g, 0)
    pattern = (1, 2, 3, 1, 2, 4)
    values: list[int | None] = [None] * 6
    for idx, v in enumerate(order):
        values[v] = pattern[idx]
    return _verified_result(g, bfs_tree(g, 0), Coloring(values, 4), BRANCH_C6)
