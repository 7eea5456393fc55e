import numpy as np
import pytest

from oracles import brute_force_girth, random_parity_check
from pseudocone import BinaryMatrix, build, eg_point_hyperplane_H
from pseudocone.errors import ZeroMatrix


def test_example_one_graph(ex1):
    G = build(ex1)
    assert G.gamma == 3 and G.max_col_weight == 3
    assert set(G.row_weights) == {3}
    assert G.girth == 6
    assert G.lam == 1
    assert G.edges == 21


def test_identity_is_acyclic():
    G = build(BinaryMatrix(np.eye(4, dtype=np.uint8)))
    assert G.girth is None
    assert G.gamma == 1 and set(G.row_weights) == {1}
    assert G.lam == 0


def test_tree_is_acyclic():
    G = build(BinaryMatrix([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]))
    assert G.girth is None


def test_adjacency_matches_matrix(ex1):
    G = build(ex1)
    for j in range(7):
        for i in range(7):
            assert (i in G.check_neighbors[j]) == bool(ex1.array[j, i])
            assert (j in G.variable_neighbors[i]) == bool(ex1.array[j, i])


def test_pair_intersection_examples(hamming):
    assert build(hamming).lam == 2
    assert build(BinaryMatrix([[1, 1], [1, 1], [1, 1], [0, 0]])).lam == 3


def test_eg_graph():
    G = build(eg_point_hyperplane_H(3, 2))
    assert G.gamma == G.max_col_weight == 16
    assert set(G.row_weights) == {16}
    assert G.girth == 4
    assert G.lam == 4


def test_zero_matrix_rejected():
    with pytest.raises(ZeroMatrix):
        build(BinaryMatrix(np.zeros((2, 3), dtype=np.uint8)))


def test_girth_matches_cycle_search_and_four_cycle_rule():
    rng = np.random.default_rng(17)
    for _ in range(60):
        A = random_parity_check(rng, 10, 6, 4)
        if not A.any():
            continue
        G = build(BinaryMatrix(A))
        assert G.girth == brute_force_girth(A)
        if G.girth is not None:
            assert G.girth % 2 == 0 and G.girth >= 4
        assert (G.girth is None or G.girth > 4) == (G.lam <= 1)
        perm = A[rng.permutation(A.shape[0])][:, rng.permutation(A.shape[1])]
        assert build(BinaryMatrix(perm)).girth == G.girth
