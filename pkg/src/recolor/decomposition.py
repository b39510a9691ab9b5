"""Treewidth-2 decomposition, chordality, and elimination orderings."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidDecomposition, NotPEO, NotWidth2, OmegaTooLarge
from .graphs import Graph


@dataclass(frozen=True)
class TreeDecomposition:
    """Tree of bags; width 2 means every bag has at most 3 vertices."""

    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]

    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def to_json(self) -> dict:
        return {
            "bags": [sorted(b) for b in self.bags],
            "tree_edges": [[i, j] for i, j in self.tree_edges],
        }

    @staticmethod
    def from_json(obj: dict) -> "TreeDecomposition":
        return TreeDecomposition(
            tuple(frozenset(int(v) for v in bag) for bag in obj["bags"]),
            tuple((int(i), int(j)) for i, j in obj["tree_edges"]),
        )


@dataclass(frozen=True)
class EliminationOrdering:
    """Permutation of the vertices; position i holds the i-th eliminated vertex."""

    order: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("not a permutation of 0..n-1")

    def positions(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos

    def to_json(self) -> dict:
        return {"order": list(self.order)}

    @staticmethod
    def from_json(obj: dict) -> "EliminationOrdering":
        return EliminationOrdering(tuple(int(v) for v in obj["order"]))


def mcs_order(g: Graph) -> EliminationOrdering:
    """Reverse of a maximum cardinality search visit order.

    For a chordal graph the result is a perfect elimination ordering. Ties
    are broken toward the lowest vertex index so the output is reproducible.
    """
    n = g.n
    weight = [0] * n
    visited = [False] * n
    visit: list[int] = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        visited[best] = True
        visit.append(best)
        for u in g.adjacency[best]:
            if not visited[u]:
                weight[u] += 1
    return EliminationOrdering(tuple(reversed(visit)))


def is_perfect_elimination(g: Graph, peo: EliminationOrdering) -> bool:
    """Check that every vertex's later neighbors form a clique."""
    pos = peo.positions()
    adj = g.neighbor_sets()
    for v in range(g.n):
        later = [w for w in g.adjacency[v] if pos[w] > pos[v]]
        for i in range(len(later)):
            for j in range(i + 1, len(later)):
                if later[j] not in adj[later[i]]:
                    return False
    return True


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination(g, mcs_order(g))


def clique_number_chordal(g: Graph, peo: EliminationOrdering) -> int:
    """Clique number of a chordal graph, read off a perfect elimination ordering."""
    if not is_perfect_elimination(g, peo):
        raise NotPEO("ordering is not a perfect elimination ordering of the graph")
    if g.n == 0:
        return 0
    pos = peo.positions()
    best = 0
    for v in range(g.n):
        later = sum(1 for w in g.adjacency[v] if pos[w] > pos[v])
        best = max(best, later)
    return best + 1


def out_neighbors(peo: EliminationOrdering, g: Graph, v: int) -> tuple[int, ...]:
    """Neighbors of v that come after it in the ordering, at most two of them."""
    pos = peo.positions()
    later = tuple(sorted(w for w in g.adjacency[v] if pos[w] > pos[v]))
    if len(later) > 2:
        raise OmegaTooLarge(f"vertex {v} has {len(later)} later neighbors")
    return later


def degeneracy_order(g: Graph) -> EliminationOrdering:
    """Smallest-degree-first elimination ordering (ties to the lowest index).

    Every vertex has at most d later neighbors, where d is the degeneracy.
    """
    adj = g.neighbor_sets()
    alive = [True] * g.n
    order = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if alive[v] and (best < 0 or len(adj[v]) < len(adj[best])):
                best = v
        alive[best] = False
        order.append(best)
        for u in adj[best]:
            adj[u].discard(best)
        adj[best] = set()
    return EliminationOrdering(tuple(order))


def validate_decomposition(g: Graph, td: TreeDecomposition, width: int = 2) -> None:
    """Raise InvalidDecomposition unless td is a width-<=width decomposition of g."""
    nodes = len(td.bags)
    if nodes == 0:
        raise InvalidDecomposition("decomposition has no nodes")
    for bag in td.bags:
        if len(bag) > width + 1:
            raise InvalidDecomposition(f"bag {sorted(bag)} exceeds size {width + 1}")
        for v in bag:
            if not (0 <= v < g.n):
                raise InvalidDecomposition(f"bag vertex {v} out of range")

    # the tree_edges must form a tree over the nodes
    if len(td.tree_edges) != nodes - 1:
        raise InvalidDecomposition("tree edge count is not nodes-1")
    nbrs: list[list[int]] = [[] for _ in range(nodes)]
    for i, j in td.tree_edges:
        if not (0 <= i < nodes and 0 <= j < nodes) or i == j:
            raise InvalidDecomposition(f"bad tree edge ({i}, {j})")
        nbrs[i].append(j)
        nbrs[j].append(i)
    seen = [False] * nodes
    stack = [0]
    seen[0] = True
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if not seen[y]:
                seen[y] = True
                stack.append(y)
    if not all(seen):
        raise InvalidDecomposition("tree is not connected")

    # every vertex appears, and its set of nodes induces a subtree
    holding: list[list[int]] = [[] for _ in range(g.n)]
    for idx, bag in enumerate(td.bags):
        for v in bag:
            holding[v].append(idx)
    for v in range(g.n):
        if not holding[v]:
            raise InvalidDecomposition(f"vertex {v} is in no bag")
        members = set(holding[v])
        reach = {holding[v][0]}
        stack = [holding[v][0]]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y in members and y not in reach:
                    reach.add(y)
                    stack.append(y)
        if reach != members:
            raise InvalidDecomposition(f"bags containing vertex {v} are not connected")

    for u, v in g.edges():
        if not any(u in bag and v in bag for bag in td.bags):
            raise InvalidDecomposition(f"edge ({u}, {v}) is in no bag")


def _prune_subset_bags(
    bags: list[set[int]], tree_edges: list[tuple[int, int]]
) -> tuple[tuple[frozenset[int], ...], tuple[tuple[int, int], ...]]:
    """Contract tree edges whose endpoint bags are nested; keeps the tree valid."""
    adj: list[set[int]] = [set() for _ in bags]
    for i, j in tree_edges:
        adj[i].add(j)
        adj[j].add(i)
    alive = [True] * len(bags)
    changed = True
    while changed:
        changed = False
        for i in range(len(bags)):
            if not alive[i]:
                continue
            for j in sorted(adj[i]):
                if bags[i] <= bags[j]:
                    for x in adj[i]:
                        if x != j:
                            adj[x].discard(i)
                            adj[x].add(j)
                            adj[j].add(x)
                    adj[j].discard(i)
                    adj[i] = set()
                    alive[i] = False
                    changed = True
                    break
            if changed:
                break
    index = {}
    new_bags = []
    for i, bag in enumerate(bags):
        if alive[i]:
            index[i] = len(new_bags)
            new_bags.append(frozenset(bag))
    new_edges = sorted(
        {
            (min(index[i], index[j]), max(index[i], index[j]))
            for i in index
            for j in adj[i]
        }
    )
    return tuple(new_bags), tuple(new_edges)


def reduce_width2(g: Graph) -> TreeDecomposition:
    """Width-<=2 tree decomposition via degree-<=2 elimination.

    Repeatedly removes a vertex of degree at most 2 (adding the edge between
    the two neighbors of a degree-2 vertex when missing) and records the bag
    {v} + N(v) at elimination time. Stalling with all degrees >= 3 proves the
    treewidth exceeds 2.
    """
    adj = g.neighbor_sets()
    alive = [True] * g.n
    elim: list[tuple[int, list[int]]] = []
    remaining = g.n
    while remaining:
        v = -1
        for u in range(g.n):
            if alive[u] and len(adj[u]) <= 2:
                v = u
                break
        if v < 0:
            raise NotWidth2("all remaining vertices have degree at least 3")
        nb = sorted(adj[v])
        if len(nb) == 2:
            a, b = nb
            adj[a].add(b)
            adj[b].add(a)
        for u in nb:
            adj[u].discard(v)
        adj[v] = set()
        alive[v] = False
        elim.append((v, nb))
        remaining -= 1

    if not elim:
        return TreeDecomposition((frozenset(),), ())

    bags: list[set[int]] = []
    tree_edges: list[tuple[int, int]] = []
    for v, nb in reversed(elim):
        bag = set(nb) | {v}
        if not bags:
            bags.append(bag)
            continue
        # the neighbors were eliminated later, so some existing bag holds them all
        need = set(nb)
        parent = next(
            (idx for idx, existing in enumerate(bags) if need <= existing), None
        )
        if parent is None:
            raise AssertionError(f"no bag contains {sorted(need)}")
        bags.append(bag)
        tree_edges.append((parent, len(bags) - 1))

    pruned_bags, pruned_edges = _prune_subset_bags(bags, tree_edges)
    return TreeDecomposition(pruned_bags, pruned_edges)
