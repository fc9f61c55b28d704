"""Undirected simple graphs: construction, DIMACS text I/O, and basic metrics.

Vertices are 0-indexed integers internally; the DIMACS text format is 1-indexed.
Adjacency lists are kept sorted, so equal graphs compare equal and every
iteration order is deterministic.
"""

from __future__ import annotations

import math
from functools import cached_property
from typing import Iterable

from .errors import DimacsError, PreconditionError

INFINITY = math.inf


class Graph:
    """An immutable simple graph with sorted adjacency lists."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise PreconditionError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise PreconditionError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adj)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(ns) for ns in self.adj)

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self.adj) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(ns) for ns in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph on ``keep``; returns it with the old-vertex -> new-vertex map."""
        kept = sorted(set(keep))
        index = {v: i for i, v in enumerate(kept)}
        sub_edges = [
            (index[u], index[v])
            for u, v in self.edges()
            if u in index and v in index
        ]
        return Graph(len(kept), sub_edges), index

    def relabel(self, image: dict[int, int] | list[int]) -> "Graph":
        """Graph with vertex v renamed to image[v]; image must be a bijection on V."""
        if isinstance(image, dict):
            image = [image[v] for v in range(self.n)]
        return Graph(self.n, [(image[u], image[v]) for u, v in self.edges()])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> Graph:
    """Parse a DIMACS graph: one ``p edge n m`` line, ``e u v`` lines, ``c`` comments.

    Vertices are 1-indexed in the text. Malformed lines, out-of-range vertices,
    duplicate edges and self-loops are each reported as a distinct parse error.
    """
    n = None
    expected_m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: repeated problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise DimacsError(f"line {lineno}: malformed problem line: {line!r}")
            try:
                n, expected_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed problem line: {line!r}") from None
            if n < 0 or expected_m < 0:
                raise DimacsError(f"line {lineno}: malformed problem line: {line!r}")
        elif fields[0] == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise DimacsError(f"line {lineno}: malformed edge line: {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed edge line: {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"line {lineno}: vertex out of range: {line!r}")
            if u == v:
                raise DimacsError(f"line {lineno}: self-loop: {line!r}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DimacsError(f"line {lineno}: duplicate edge: {line!r}")
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"line {lineno}: malformed line: {line!r}")
    if n is None:
        raise DimacsError("missing problem line")
    if expected_m is not None and expected_m != len(edges):
        raise DimacsError(f"problem line promises {expected_m} edges, found {len(edges)}")
    return Graph(n, edges)


def render_graph(g: Graph) -> str:
    """Canonical DIMACS text: problem line, then sorted 1-indexed edges."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def distances(g: Graph, source: int) -> list[int | float]:
    """BFS distances from ``source``; unreachable vertices get infinity."""
    if not 0 <= source < g.n:
        raise PreconditionError(f"source {source} out of range")
    dist: list[int | float] = [INFINITY] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.adj[u]:
                if dist[v] is INFINITY:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist

def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return INFINITY not in distances(g, 0)


def diameter(g: Graph) -> int:
    """Largest pairwise distance; raises on disconnected input."""
    if g.n == 0:
        raise PreconditionError("diameter of the empty graph is undefined")
    best = 0
    for v in range(g.n):
        ecc = max(distances(g, v))
        if ecc is INFINITY:
            raise PreconditionError("graph is disconnected")
        best = max(best, int(ecc))
    return best


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or infinity for a forest.

    One BFS per root: every non-tree edge (u, w) closes a walk of length
    dist[u] + dist[w] + 1 through the root, which always contains a cycle no
    longer than that; for roots on a shortest cycle the bound is attained, so
    the minimum over all roots is exact. O(n * m).
    """
    best: int | float = INFINITY
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if dist[w] == -1:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w and parent[w] != u:
                        best = min(best, dist[u] + dist[w] + 1)
            frontier = nxt
    return best


def has_cycle_shorter_than_five(g: Graph) -> bool:
    """True iff the graph has a triangle or a 4-cycle.

    Independent of girth(): a triangle is an edge whose endpoints share a
    neighbor, and a 4-cycle is a vertex pair with two common neighbors.
    """
    sets = g.neighbor_sets
    for u, v in g.edges():
        if sets[u] & sets[v]:
            return True
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if len(sets[u] & sets[v]) >= 2:
                return True
    return False
