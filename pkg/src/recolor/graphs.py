"""Graphs, colorings, and random instance generators.

Vertices are integers 0..n-1 and colors are integers 1..k. Graphs and
colorings are immutable once built, so they can be shared freely. All
randomness flows through an explicit seed; nothing touches the global
random state.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidColoring, InvalidSize, NotEnoughColors


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with per-vertex sorted adjacency tuples."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in sets))

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def neighbor_sets(self) -> list[set[int]]:
        """Adjacency as sets, for algorithms doing many membership tests."""
        return [set(a) for a in self.adjacency]

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges()]}

    @staticmethod
    def from_json(obj: dict) -> "Graph":
        return Graph.from_edges(int(obj["n"]), [(int(u), int(v)) for u, v in obj["edges"]])


@dataclass(frozen=True)
class Coloring:
    """Total color assignment, one color in 1..k per vertex."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        for c in self.colors:
            if not (1 <= c <= self.k):
                raise InvalidColoring(f"color {c} outside 1..{self.k}")

    def to_json(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @staticmethod
    def from_json(obj: dict) -> "Coloring":
        return Coloring(int(obj["k"]), tuple(int(c) for c in obj["colors"]))


def is_proper(g: Graph, coloring: Coloring) -> bool:
    """True iff no edge of g joins two vertices of the same color."""
    if len(coloring.colors) != g.n:
        raise InvalidColoring(
            f"coloring has {len(coloring.colors)} entries for a graph on {g.n} vertices"
        )
    cols = coloring.colors
    for u in range(g.n):
        cu = cols[u]
        for v in g.adjacency[u]:
            if v > u and cols[v] == cu:
                return False
    return True


def spanning_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Same vertex set, keeping only edges with both endpoints in `vertices`."""
    keep = set(vertices)
    return Graph.from_edges(
        g.n, [(u, v) for u, v in g.edges() if u in keep and v in keep]
    )


def _build_2tree(n: int, rng: random.Random) -> Graph:
    # start from a triangle, then repeatedly glue a new vertex onto a random edge
    edges = [(0, 1), (0, 2), (1, 2)]
    for v in range(3, n):
        a, b = edges[rng.randrange(len(edges))]
        edges.append((a, v))
        edges.append((b, v))
    return Graph.from_edges(n, edges)


def gen_2tree(n: int, seed: int) -> Graph:
    """Random 2-tree on n >= 3 vertices; always has 2n-3 edges and is chordal."""
    if n < 3:
        raise InvalidSize(f"a 2-tree needs at least 3 vertices, got {n}")
    return _build_2tree(n, random.Random(seed))


def gen_partial_2tree(n: int, keep_prob: float, seed: int) -> Graph:
    """Random subgraph of gen_2tree(n, seed): each edge kept with probability keep_prob.

    keep_prob=1 reproduces gen_2tree(n, seed) exactly. The result always has
    treewidth at most 2.
    """
    if n < 3:
        raise InvalidSize(f"a partial 2-tree needs at least 3 vertices, got {n}")
    rng = random.Random(seed)
    base = _build_2tree(n, rng)
    kept = [e for e in base.edges() if rng.random() < keep_prob]
    return Graph.from_edges(n, kept)


def gen_chordal_omega3(n: int, seed: int) -> Graph:
    """Random chordal graph with clique number <= 3.

    Vertices are added one at a time; each new vertex picks an existing
    clique of size 0, 1 or 2 as its neighborhood, so construction order
    reversed is a perfect elimination ordering.
    """
    if n < 1:
        raise InvalidSize(f"need at least 1 vertex, got {n}")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        # bias toward size 2 so instances are not mostly forests
        size = rng.choices((0, 1, 2), weights=(1, 3, 6))[0]
        if size == 2 and not edges:
            size = 1
        if size == 2:
            a, b = edges[rng.randrange(len(edges))]
            edges.append((a, v))
            edges.append((b, v))
        elif size == 1:
            edges.append((rng.randrange(v), v))
    return Graph.from_edges(n, edges)


def _order_tuple(order) -> tuple[int, ...]:
    return tuple(order.order) if hasattr(order, "order") else tuple(order)


def random_proper_coloring(g: Graph, peo, k: int, seed: int) -> Coloring:
    """Proper k-coloring built along the reverse of an elimination ordering.

    Each vertex gets a uniformly random color among those unused by its
    already-colored neighbors. Works whenever k exceeds the number of later
    neighbors of every vertex along the ordering.
    """
    order = _order_tuple(peo)
    if sorted(order) != list(range(g.n)):
        raise InvalidColoring("ordering is not a permutation of the vertices")
    rng = random.Random(seed)
    colors = [0] * g.n
    for v in reversed(order):
        used = {colors[w] for w in g.adjacency[v] if colors[w]}
        avail = [c for c in range(1, k + 1) if c not in used]
        if not avail:
            raise NotEnoughColors(f"no color left for vertex {v} with k={k}")
        colors[v] = rng.choice(avail)
    return Coloring(k, tuple(colors))


def greedy_coloring(g: Graph, order) -> Coloring:
    """Smallest-available-color coloring along the reverse of the ordering.

    Along a perfect elimination ordering of a chordal graph this uses
    exactly omega(G) colors; with at most 2 later neighbors per vertex it
    never needs more than 3.
    """
    seq = _order_tuple(order)
    colors = [0] * g.n
    for v in reversed(seq):
        used = {colors[w] for w in g.adjacency[v] if colors[w]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(max(colors, default=1), tuple(colors))
