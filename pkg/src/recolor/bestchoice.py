"""Greedy bounded recoloring over an elimination ordering.

The sequence between two colorings is built one vertex at a time, from the
last vertex of the ordering down to the first. Each new vertex u is spliced
into the existing sequence: whenever an already-processed neighbor is about
to take u's current color, u is recolored just before that step, choosing a
color that minimizes how often u will be forced to move again. A final step
gives u its target color if needed. On chordal graphs with clique number at
most 3 and five colors this recolors every vertex a bounded number of times.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import EliminationOrdering, is_perfect_elimination
from .errors import InvalidInput, NoValidColor
from .graphs import Coloring, Graph, is_proper
from .sequences import RecoloringSequence, verify_sequence


@dataclass(frozen=True)
class FutureColorList:
    """Upcoming recolorings of a vertex's neighbors: (step position, color) pairs."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        positions = [p for p, _ in self.entries]
        if any(b <= a for a, b in zip(positions, positions[1:])):
            raise ValueError("positions must be strictly increasing")

    def colors(self) -> list[int]:
        return [c for _, c in self.entries]


def _choose_color(valid: list[int], future_colors: list[int], target: int) -> int:
    """Pick a color for a vertex forced to move.

    Preference order: the target color if it is valid and never reappears
    among the upcoming neighbor colors; otherwise the smallest valid color
    absent from those; otherwise the valid color whose first upcoming
    occurrence is latest (ties to the smallest color).
    """
    if not valid:
        raise NoValidColor("every color collides with the vertex or a neighbor")
    upcoming = set(future_colors)
    if target in valid and target not in upcoming:
        return target
    fresh = [c for c in valid if c not in upcoming]
    if fresh:
        return min(fresh)
    first_at = {}
    for pos, c in enumerate(future_colors):
        if c not in first_at:
            first_at[c] = pos
    return max(valid, key=lambda c: (first_at[c], -c))


def best_choice_color(
    u: int,
    current: Coloring,
    g: Graph,
    future: FutureColorList,
    beta_u: int,
    k: int,
) -> int:
    """Color chosen for u when the next neighbor recoloring collides with it.

    Valid colors differ from u's current color and from every current
    neighbor color.
    """
    cols = current.colors
    forbidden = {cols[u]} | {cols[w] for w in g.adjacency[u]}
    valid = [c for c in range(1, k + 1) if c not in forbidden]
    return _choose_color(valid, future.colors(), beta_u)


def _extend(
    steps: list[tuple[int, int]],
    start_colors,
    u: int,
    neighbors,
    alpha_u: int,
    beta_u: int,
    k: int,
) -> list[tuple[int, int]]:
    """Splice recolorings of u into a sequence that never touches u.

    `neighbors` are u's neighbors within the already-processed subgraph; the
    existing steps only recolor processed vertices.
    """
    cur = list(start_colors)
    cur[u] = alpha_u
    nbrs = list(neighbors)
    nbrset = set(nbrs)
    future_colors = [c for v, c in steps if v in nbrset]

    out: list[tuple[int, int]] = []
    fut = 0
    for v, c in steps:
        if v in nbrset:
            if c == cur[u]:
                forbidden = {cur[u]} | {cur[w] for w in nbrs}
                valid = [x for x in range(1, k + 1) if x not in forbidden]
                choice = _choose_color(valid, future_colors[fut:], beta_u)
                out.append((u, choice))
                cur[u] = choice
            fut += 1
        out.append((v, c))
        cur[v] = c
    if cur[u] != beta_u:
        out.append((u, beta_u))
    return out


def local_best_choice_extend(
    g: Graph,
    u: int,
    alpha_u: int,
    beta_u: int,
    seq: RecoloringSequence,
) -> RecoloringSequence:
    """Extend a valid sequence on g minus u to one on g, recoloring u lazily.

    u moves only when a neighbor is about to take its current color, plus one
    final step to reach beta_u if needed. The result starts from seq's start
    with u set to alpha_u and is verified before being returned.
    """
    if any(v == u for v, _ in seq.steps):
        raise InvalidInput(f"sequence already recolors vertex {u}")
    k = seq.start.k
    steps = _extend(
        list(seq.steps), seq.start.colors, u, g.adjacency[u], alpha_u, beta_u, k
    )
    colors = list(seq.start.colors)
    colors[u] = alpha_u
    result = RecoloringSequence(Coloring(k, tuple(colors)), tuple(steps))
    verify_sequence(g, result)
    return result


def best_choice_recoloring(
    g: Graph,
    peo: EliminationOrdering,
    alpha: Coloring,
    beta: Coloring,
    k: int,
) -> RecoloringSequence:
    """Sequence from alpha to beta, extending vertex by vertex along the ordering.

    Requires a perfect elimination ordering and k at least 2 plus the largest
    number of later neighbors of any vertex, so a valid color always exists.
    """
    n = g.n
    if len(alpha.colors) != n or len(beta.colors) != n:
        raise InvalidInput("coloring length does not match the graph")
    if max(alpha.colors, default=1) > k or max(beta.colors, default=1) > k:
        raise InvalidInput(f"colorings must use colors within 1..{k}")
    if not is_proper(g, alpha) or not is_proper(g, beta):
        raise InvalidInput("both endpoint colorings must be proper")
    if not is_perfect_elimination(g, peo):
        raise InvalidInput("ordering is not a perfect elimination ordering")

    order = peo.order
    pos = peo.positions()
    max_out = 0
    for v in range(n):
        max_out = max(max_out, sum(1 for w in g.adjacency[v] if pos[w] > pos[v]))
    if k < 2 + max_out:
        raise InvalidInput(f"need k >= {2 + max_out}, got {k}")

    steps: list[tuple[int, int]] = []
    for i in reversed(range(n)):
        u = order[i]
        later = [w for w in g.adjacency[u] if pos[w] > i]
        steps = _extend(steps, alpha.colors, u, later, alpha.colors[u], beta.colors[u], k)

    seq = RecoloringSequence(Coloring(k, alpha.colors), tuple(steps))
    final = verify_sequence(g, seq)
    if final.colors != beta.colors:
        raise AssertionError("sequence does not end at the target coloring")
    return seq
