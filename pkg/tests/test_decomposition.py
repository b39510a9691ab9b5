import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recolor import (
    EliminationOrdering,
    Graph,
    InvalidDecomposition,
    NotPEO,
    NotWidth2,
    TreeDecomposition,
    clique_number_chordal,
    degeneracy_order,
    gen_2tree,
    gen_chordal_omega3,
    gen_partial_2tree,
    is_chordal,
    is_perfect_elimination,
    mcs_order,
    out_neighbors,
    reduce_width2,
    validate_decomposition,
)

import helpers

K3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
K4 = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
C5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


def _random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def test_mcs_k3_is_perfect():
    assert is_perfect_elimination(K3, mcs_order(K3))


def test_mcs_edgeless_any_order_fine():
    g = Graph.from_edges(5, [])
    assert is_perfect_elimination(g, mcs_order(g))


def test_c4_not_chordal():
    assert not is_perfect_elimination(C4, mcs_order(C4))
    assert not is_chordal(C4)


def test_k4_chordal():
    assert is_chordal(K4)


def test_2tree_chordal():
    assert is_chordal(gen_2tree(15, 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(0, 10**6), st.integers(1, 9))
def test_is_chordal_matches_brute_force(n, seed, tenths):
    g = _random_graph(n, tenths / 10, seed)
    assert is_chordal(g) == helpers.brute_is_chordal(g)


def test_clique_number_k3():
    assert clique_number_chordal(K3, mcs_order(K3)) == 3


def test_clique_number_edgeless():
    g = Graph.from_edges(4, [])
    assert clique_number_chordal(g, mcs_order(g)) == 1


def test_clique_number_matches_brute_force():
    g = gen_chordal_omega3(40, 5)
    got = clique_number_chordal(g, mcs_order(g))
    assert got == helpers.brute_max_clique(g, cap=4)
    assert got <= 3


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10**6))
def test_clique_number_brute_small(n, seed):
    g = gen_chordal_omega3(n, seed)
    assert clique_number_chordal(g, mcs_order(g)) == helpers.brute_max_clique(g)


def test_clique_number_rejects_non_peo():
    with pytest.raises(NotPEO):
        clique_number_chordal(C4, EliminationOrdering((0, 1, 2, 3)))


def test_reduce_width2_k3_single_bag():
    td = reduce_width2(K3)
    assert td.bags == (frozenset({0, 1, 2}),)
    assert td.width() == 2


def test_reduce_width2_k4_rejected():
    with pytest.raises(NotWidth2):
        reduce_width2(K4)


def test_reduce_width2_c5_three_bags():
    td = reduce_width2(C5)
    assert len(td.bags) == 3
    validate_decomposition(C5, td)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 50), st.integers(0, 10**6), st.integers(0, 10))
def test_reduce_width2_valid_on_partial_2trees(n, seed, tenths):
    g = gen_partial_2tree(n, tenths / 10, seed)
    td = reduce_width2(g)
    validate_decomposition(g, td)


def test_validator_catches_missing_edge():
    td = TreeDecomposition((frozenset({0, 1}), frozenset({1, 2})), ((0, 1),))
    with pytest.raises(InvalidDecomposition):
        validate_decomposition(K3, td)


def test_validator_catches_disconnected_vertex_set():
    td = TreeDecomposition(
        (frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})),
        ((0, 1), (1, 2)),
    )
    # vertex 0 sits in bags 0 and 2, which are not adjacent
    with pytest.raises(InvalidDecomposition):
        validate_decomposition(K3, td)


def test_validator_catches_oversized_bag():
    td = TreeDecomposition((frozenset({0, 1, 2, 3}),), ())
    with pytest.raises(InvalidDecomposition):
        validate_decomposition(K4, td)


def test_out_neighbors_last_vertex_empty():
    peo = mcs_order(K3)
    assert out_neighbors(peo, K3, peo.order[-1]) == ()


def test_out_neighbors_k3_first_vertex():
    peo = EliminationOrdering((0, 1, 2))
    assert out_neighbors(peo, K3, 0) == (1, 2)


def test_out_neighbors_pairs_adjacent():
    g = gen_chordal_omega3(25, 1)
    peo = mcs_order(g)
    for v in range(g.n):
        outs = out_neighbors(peo, g, v)
        if len(outs) == 2:
            assert g.has_edge(outs[0], outs[1])


def test_out_neighbors_rejects_high_degree():
    from recolor import OmegaTooLarge

    peo = EliminationOrdering((0, 1, 2, 3))
    with pytest.raises(OmegaTooLarge):
        out_neighbors(peo, K4, 0)


def test_degeneracy_order_on_partial_2tree():
    g = gen_partial_2tree(30, 0.6, 4)
    order = degeneracy_order(g)
    pos = order.positions()
    for v in range(g.n):
        assert sum(1 for w in g.adjacency[v] if pos[w] > pos[v]) <= 2


def test_td_json_round_trip():
    td = reduce_width2(C5)
    assert TreeDecomposition.from_json(td.to_json()) == td


def test_peo_json_round_trip():
    peo = mcs_order(K3)
    assert EliminationOrdering.from_json(peo.to_json()) == peo
