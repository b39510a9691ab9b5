"""Reduction of treewidth-2 instances to chordal ones and the full pipeline.

A treewidth-2 graph with a proper coloring is turned into a chordal graph of
clique number at most 3 by merging same-colored vertices that share a bag and
then filling every bag into a clique. Sequences found on the merged graph
lift back by expanding each merged step over its class. The pipeline chains
two such reductions (one per endpoint coloring) through a palette-rotation
bridge between 3-colorings, giving a transformation between any two proper
5-colorings that recolors every vertex a bounded number of times.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bestchoice import best_choice_recoloring
from .decomposition import (
    EliminationOrdering,
    TreeDecomposition,
    mcs_order,
    reduce_width2,
    validate_decomposition,
)
from .errors import (
    ImproperStart,
    ImproperStep,
    InvalidColoring,
    InvalidDecomposition,
    InvalidInput,
    LiftFailure,
    NoOpStep,
)
from .graphs import Coloring, Graph, greedy_coloring, is_proper
from .sequences import (
    RecoloringSequence,
    concatenate,
    reverse_sequence,
    verify_sequence,
)

PER_VERTEX_CHORDAL_BOUND = 542
PER_VERTEX_PIPELINE_BOUND = 2 * PER_VERTEX_CHORDAL_BOUND + 2


@dataclass(frozen=True)
class MergeMap:
    """Surjection from original vertices onto merged classes.

    classes[i] lists the original vertices of merged vertex i, ascending;
    to_merged inverts it. Every class is an independent set whose vertices
    share one color in the coloring the merge was built from.
    """

    to_merged: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "to_merged": list(self.to_merged),
            "classes": [list(c) for c in self.classes],
        }

    @staticmethod
    def from_json(obj: dict) -> "MergeMap":
        return MergeMap(
            tuple(int(x) for x in obj["to_merged"]),
            tuple(tuple(int(v) for v in c) for c in obj["classes"]),
        )


def merge_same_colored(
    g: Graph, td: TreeDecomposition, alpha: Coloring
) -> tuple[Graph, MergeMap, Coloring]:
    """Merge same-colored vertices sharing a bag, then fill bags into cliques.

    Returns the merged-and-filled graph (chordal, clique number <= 3), the
    merge map, and the inherited coloring, which is proper on the result.
    """
    try:
        validate_decomposition(g, td)
    except InvalidDecomposition:
        raise
    if not is_proper(g, alpha):
        raise InvalidColoring("input coloring is not proper")

    # classes keyed by representative = smallest member
    rep = list(range(g.n))
    members: dict[int, list[int]] = {v: [v] for v in range(g.n)}
    bags = [set(b) for b in td.bags]

    while True:
        # first bag (ascending) with a repeated color; smallest pair within it
        pick = None
        for bag in bags:
            by_color: dict[int, list[int]] = {}
            for r in sorted(bag):
                by_color.setdefault(alpha.colors[r], []).append(r)
            pairs = [(grp[0], grp[1]) for grp in by_color.values() if len(grp) >= 2]
            if pairs:
                pick = min(pairs)
                break
        if pick is None:
            break
        a, b = pick
        members[a].extend(members.pop(b))
        for v in members[a]:
            rep[v] = a
        for bag in bags:
            if b in bag:
                bag.discard(b)
                bag.add(a)

    reps = sorted(members)
    index = {r: i for i, r in enumerate(reps)}
    to_merged = tuple(index[rep[v]] for v in range(g.n))
    classes = tuple(tuple(sorted(members[r])) for r in reps)

    edges = set()
    for bag in bags:
        listed = sorted(index[r] for r in bag)
        for i in range(len(listed)):
            for j in range(i + 1, len(listed)):
                edges.add((listed[i], listed[j]))
    h = Graph.from_edges(len(reps), sorted(edges))
    alpha_h = Coloring(alpha.k, tuple(alpha.colors[r] for r in reps))
    return h, MergeMap(to_merged, classes), alpha_h


def lift_sequence(
    seq_h: RecoloringSequence, merge_map: MergeMap, g: Graph
) -> RecoloringSequence:
    """Expand a merged-graph sequence back to the original graph.

    Each merged step becomes one step per class member, ascending. The result
    is verified on g; failure means the inputs violated the merge contract.
    """
    start = Coloring(
        seq_h.start.k,
        tuple(seq_h.start.colors[merge_map.to_merged[v]] for v in range(g.n)),
    )
    steps: list[tuple[int, int]] = []
    for m, c in seq_h.steps:
        for v in merge_map.classes[m]:
            steps.append((v, c))
    lifted = RecoloringSequence(start, tuple(steps))
    try:
        verify_sequence(g, lifted)
    except (ImproperStart, ImproperStep, NoOpStep, InvalidColoring) as exc:
        raise LiftFailure(f"expanded sequence is invalid on the original graph: {exc}")
    return lifted


def two_phase_transform(
    g: Graph, gamma_s: Coloring, gamma_t: Coloring, d: int, k: int
) -> RecoloringSequence:
    """Transform between two (d+1)-colorings, recoloring every vertex at most twice.

    First the source color classes 1..d rotate out to spare colors d+2..2d+1,
    then class d+1 and finally the parked classes move straight to their
    target colors. Steps that would not change a color are omitted. Requires
    k >= 2d+1.
    """
    if k < 2 * d + 1:
        raise InvalidInput(f"need k >= {2 * d + 1}, got {k}")
    for name, col in (("source", gamma_s), ("target", gamma_t)):
        if len(col.colors) != g.n:
            raise InvalidInput(f"{name} coloring length does not match the graph")
        if any(c > d + 1 for c in col.colors):
            raise InvalidInput(f"{name} coloring uses colors above {d + 1}")
        if not is_proper(g, col):
            raise InvalidInput(f"{name} coloring is not proper")

    classes: list[list[int]] = [[] for _ in range(d + 2)]
    for v in range(g.n):
        classes[gamma_s.colors[v]].append(v)

    steps: list[tuple[int, int]] = []
    for i in range(1, d + 1):
        for v in classes[i]:
            steps.append((v, d + 1 + i))
    for v in classes[d + 1]:
        if gamma_t.colors[v] != d + 1:
            steps.append((v, gamma_t.colors[v]))
    for i in range(1, d + 1):
        for v in classes[i]:
            steps.append((v, gamma_t.colors[v]))

    seq = RecoloringSequence(Coloring(k, gamma_s.colors), tuple(steps))
    final = verify_sequence(g, seq)
    if final.colors != gamma_t.colors:
        raise AssertionError("two-phase transform missed its target")
    return seq


def _toward_3coloring(
    g: Graph, td: TreeDecomposition, coloring: Coloring
) -> tuple[RecoloringSequence, Coloring]:
    """Sequence on g from `coloring` to a 3-coloring, via the merged graph."""
    h, merge_map, col_h = merge_same_colored(g, td, coloring)
    peo = mcs_order(h)
    target = greedy_coloring(h, peo)
    seq_h = best_choice_recoloring(h, peo, col_h, target, k=5)
    lifted = lift_sequence(seq_h, merge_map, g)
    final = Coloring(5, tuple(target.colors[merge_map.to_merged[v]] for v in range(g.n)))
    return lifted, final


def pipeline_theorem(g: Graph, alpha: Coloring, beta: Coloring) -> RecoloringSequence:
    """Full transformation between two proper 5-colorings of a treewidth-2 graph.

    Both endpoints are pushed down to 3-colorings through their own merged
    chordal graphs, the two 3-colorings are bridged with the two-phase
    rotation, and the second half is replayed in reverse. Every vertex is
    recolored at most PER_VERTEX_PIPELINE_BOUND times.
    """
    for name, col in (("alpha", alpha), ("beta", beta)):
        if len(col.colors) != g.n:
            raise InvalidColoring(f"{name} has wrong length")
        if max(col.colors, default=1) > 5:
            raise InvalidColoring(f"{name} must use colors within 1..5")
        if not is_proper(g, col):
            raise InvalidColoring(f"{name} is not proper")

    td = reduce_width2(g)
    seq_a, gamma_1 = _toward_3coloring(g, td, alpha)
    seq_b, gamma_2 = _toward_3coloring(g, td, beta)
    bridge = two_phase_transform(g, gamma_1, gamma_2, d=2, k=5)
    whole = concatenate([seq_a, bridge, reverse_sequence(seq_b)])
    final = verify_sequence(g, whole)
    if final.colors != beta.colors:
        raise AssertionError("pipeline does not end at beta")
    return whole
