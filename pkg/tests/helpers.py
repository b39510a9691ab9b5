"""Independent brute-force oracles used to cross-check the library.

Everything here is deliberately written from the definitions, not by calling
back into the code paths under test.
"""

from collections import deque
from itertools import combinations, product

from recolor import Graph


def proper_colorings(g: Graph, k: int):
    """All proper k-colorings as tuples, by brute enumeration."""
    out = []
    for colors in product(range(1, k + 1), repeat=g.n):
        if all(colors[u] != colors[v] for u, v in g.edges()):
            out.append(colors)
    return out


def _neighbors_in_reconfig(g: Graph, k: int, colors):
    for v in range(g.n):
        for c in range(1, k + 1):
            if c == colors[v]:
                continue
            if any(colors[w] == c for w in g.adjacency[v]):
                continue
            yield colors[:v] + (c,) + colors[v + 1 :]


def naive_bfs_distance(g: Graph, k: int, alpha, beta):
    """Bidirectional search over coloring tuples; None when unreachable."""
    alpha, beta = tuple(alpha), tuple(beta)
    if alpha == beta:
        return 0
    front = {alpha: 0}
    back = {beta: 0}
    q_front = deque([alpha])
    q_back = deque([beta])
    while q_front and q_back:
        if len(q_front) <= len(q_back):
            queue, seen, other = q_front, front, back
        else:
            queue, seen, other = q_back, back, front
        for _ in range(len(queue)):
            state = queue.popleft()
            for nxt in _neighbors_in_reconfig(g, k, state):
                if nxt in other:
                    return seen[state] + 1 + other[nxt]
                if nxt not in seen:
                    seen[nxt] = seen[state] + 1
                    queue.append(nxt)
    return None


def naive_all_distances(g: Graph, k: int, source):
    """Plain dict BFS from one coloring tuple."""
    dist = {tuple(source): 0}
    queue = deque([tuple(source)])
    while queue:
        state = queue.popleft()
        for nxt in _neighbors_in_reconfig(g, k, state):
            if nxt not in dist:
                dist[nxt] = dist[state] + 1
                queue.append(nxt)
    return dist


def brute_is_chordal(g: Graph) -> bool:
    """No vertex subset of size >= 4 induces a cycle. Exponential; n <= 10."""
    adj = g.neighbor_sets()
    for size in range(4, g.n + 1):
        for subset in combinations(range(g.n), size):
            inside = set(subset)
            degs = [len(adj[v] & inside) for v in subset]
            if any(d != 2 for d in degs):
                continue
            # connected and 2-regular means an induced cycle
            seen = {subset[0]}
            stack = [subset[0]]
            while stack:
                x = stack.pop()
                for y in adj[x] & inside:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) == size:
                return False
    return True


def brute_max_clique(g: Graph, cap: int | None = None) -> int:
    """Largest clique by subset enumeration, optionally capped in size.

    With cap=c the result is min(omega, c): enough to certify omega <= c-1
    or to compare exact values known to be below the cap.
    """
    adj = g.neighbor_sets()
    best = 1 if g.n else 0
    top = g.n if cap is None else min(cap, g.n)
    for size in range(2, top + 1):
        found = False
        for subset in combinations(range(g.n), size):
            if all(b in adj[a] for a, b in combinations(subset, 2)):
                best = max(best, size)
                found = True
                break
        if not found:
            break  # no clique of this size, none bigger either
    return best


def naive_fixed_pattern_indices(trace, pattern):
    """Sliding-window scan for a fixed vertex pattern."""
    w = len(pattern)
    return [
        i for i in range(len(trace) - w + 1) if tuple(trace[i : i + w]) == tuple(pattern)
    ]


def saved_positions_oracle(seq, peo, g, v):
    """Saved steps recomputed from the definition over full-sequence indices."""
    pos = peo.positions()
    outs = {w for w in g.adjacency[v] if pos[w] > pos[v]}
    closed = outs | {v}
    restricted_full = [t for t, (x, _) in enumerate(seq.steps) if x in closed]
    v_steps_full = [t for t, (x, _) in enumerate(seq.steps) if x == v]
    saved = []
    for ridx, t in enumerate(restricted_full):
        if seq.steps[t][0] not in outs:
            continue
        cond_a = all(tv > t for tv in v_steps_full)
        cond_b = all(tv < t for tv in v_steps_full)
        prev_two = restricted_full[max(0, ridx - 2) : ridx]
        cond_c = len(prev_two) == 2 and all(seq.steps[p][0] != v for p in prev_two)
        if cond_a or cond_b or cond_c:
            saved.append(ridx)
    return saved
