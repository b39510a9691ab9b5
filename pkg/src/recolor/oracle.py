"""Exhaustive search over the graph of proper k-colorings.

States are proper colorings; two states are adjacent when they differ on
exactly one vertex. Everything here enumerates the full state space, so a
cap guards against accidental blow-ups. Intended for small instances used to
cross-validate the constructive transformations.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .errors import InvalidColoring, TooLarge
from .graphs import Coloring, Graph, is_proper

DEFAULT_STATE_CAP = 2_000_000


def encode_coloring(coloring: Coloring, k: int) -> int:
    code = 0
    weight = 1
    for c in coloring.colors:
        code += (c - 1) * weight
        weight *= k
    return code


def decode_state(code: int, n: int, k: int) -> Coloring:
    colors = []
    for _ in range(n):
        colors.append(code % k + 1)
        code //= k
    return Coloring(k, tuple(colors))


def _guard(g: Graph, k: int, state_cap: int) -> None:
    if k**g.n > state_cap:
        raise TooLarge(f"{k}^{g.n} states exceed the cap of {state_cap}")


def bfs_distance(
    g: Graph,
    k: int,
    alpha: Coloring,
    beta: Coloring,
    state_cap: int = DEFAULT_STATE_CAP,
) -> int | None:
    """Fewest single-vertex recolorings from alpha to beta, None if unreachable."""
    _guard(g, k, state_cap)
    for name, col in (("alpha", alpha), ("beta", beta)):
        if not is_proper(g, col):
            raise InvalidColoring(f"{name} is not proper")
        if max(col.colors, default=1) > k:
            raise InvalidColoring(f"{name} uses colors above {k}")
    start = encode_coloring(alpha, k)
    goal = encode_coloring(beta, k)
    if start == goal:
        return 0
    mask = _kernels.proper_mask(g.n, k, g.edges())
    dist = _kernels.bfs_levels(start, mask, g.n, k)
    d = int(dist[goal])
    return None if d < 0 else d


def reconfig_connected(g: Graph, k: int, state_cap: int = DEFAULT_STATE_CAP) -> bool:
    """True iff every proper k-coloring is reachable from every other."""
    _guard(g, k, state_cap)
    mask = _kernels.proper_mask(g.n, k, g.edges())
    total = int(mask.sum())
    if total <= 1:
        return True
    start = int(np.flatnonzero(mask)[0])
    dist = _kernels.bfs_levels(start, mask, g.n, k)
    return int((dist >= 0).sum()) == total


def reconfig_diameter(g: Graph, k: int, state_cap: int = DEFAULT_STATE_CAP) -> int | None:
    """Largest pairwise distance between proper k-colorings; None if disconnected.

    Runs one search per proper state, so keep instances very small.
    """
    _guard(g, k, state_cap)
    mask = _kernels.proper_mask(g.n, k, g.edges())
    sources = np.flatnonzero(mask)
    total = int(sources.size)
    if total == 0:
        return None
    best = 0
    for src in sources:
        dist = _kernels.bfs_levels(int(src), mask, g.n, k)
        if int((dist >= 0).sum()) != total:
            return None
        best = max(best, int(dist.max()))
    return best
