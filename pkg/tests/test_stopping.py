import itertools

import numpy as np
import pytest

from oracles import brute_force_stopping_sets, random_parity_check
from pseudocone import BinaryMatrix, enumerate_codewords, is_stopping_set, min_distance, stopping_distance
from pseudocone.errors import DimensionTooLarge, IndexOutOfRange
from pseudocone.gf2 import mask_to_vector

# 1-based sets as listed for the [7,3,4] simplex code
SMALLEST = [{1, 3, 4, 5}, {2, 4, 5, 6}, {3, 5, 6, 7}, {1, 4, 6, 7}, {1, 2, 5, 7}, {1, 2, 3, 6}, {2, 3, 4, 7}]


def zero_based(sets):
    return sorted(tuple(sorted(i - 1 for i in s)) for s in sets)


def test_membership(ex1):
    assert is_stopping_set(ex1, [0, 2, 3, 4])
    assert not is_stopping_set(ex1, [0])
    assert is_stopping_set(ex1, range(7))
    assert is_stopping_set(ex1, [])
    with pytest.raises(IndexOutOfRange):
        is_stopping_set(ex1, [7])


def test_example_one_smallest_sets(ex1):
    rep = stopping_distance(ex1)
    assert rep.stopping_distance == 4
    assert rep.count == 7
    assert sorted(rep.smallest_sets) == zero_based(SMALLEST)


def test_example_one_exhaustive_list(ex1):
    # the seven weight-4 supports, the seven complements of one column, and everything
    rep = stopping_distance(ex1, exhaustive=True)
    sizes = [len(s) for s in rep.all_sets]
    assert sizes == [4] * 7 + [6] * 7 + [7]
    assert set(rep.all_sets[7:14]) == {tuple(c for c in range(7) if c != i) for i in range(7)}
    assert rep.all_sets == tuple(sorted(brute_force_stopping_sets(ex1.array), key=lambda s: (len(s), s)))


def test_hamming_stopping_distance(hamming):
    rep = stopping_distance(hamming)
    assert rep.stopping_distance == 3 and rep.count == 7


def test_search_matches_exhaustive_sweep():
    rng = np.random.default_rng(23)
    for _ in range(60):
        A = random_parity_check(rng, 12, 7, 5)
        H = BinaryMatrix(A)
        truth = brute_force_stopping_sets(A)
        rep = stopping_distance(H)
        if not truth:
            assert rep.stopping_distance is None
            continue
        s = min(len(x) for x in truth)
        assert rep.stopping_distance == s
        assert sorted(rep.smallest_sets) == sorted(x for x in truth if len(x) == s)
        full = stopping_distance(H, exhaustive=True)
        assert sorted(full.all_sets) == sorted(truth)


def test_branch_and_bound_on_fifteen_columns():
    rng = np.random.default_rng(29)
    for _ in range(5):
        A = random_parity_check(rng, 15, 8, 6)
        A = np.pad(A, ((0, 0), (0, 15 - A.shape[1])))
        A[0, A.shape[1] - 1] = 1
        H = BinaryMatrix(A)
        truth = brute_force_stopping_sets(A)
        s = min(len(x) for x in truth)
        rep = stopping_distance(H)
        assert rep.stopping_distance == s
        assert sorted(rep.smallest_sets) == sorted(x for x in truth if len(x) == s)


def test_codeword_supports_and_unions():
    rng = np.random.default_rng(31)
    for _ in range(30):
        H = BinaryMatrix(random_parity_check(rng, 10, 6, 5))
        for w in enumerate_codewords(H):
            assert is_stopping_set(H, np.flatnonzero(mask_to_vector(w, H.cols)))
        sets = brute_force_stopping_sets(H.array)
        for a, b in itertools.islice(itertools.combinations(sets, 2), 100):
            assert is_stopping_set(H, set(a) | set(b))
        d = min_distance(H)
        if d is not None:
            assert stopping_distance(H).stopping_distance <= d


def test_caps():
    H = BinaryMatrix(np.ones((1, 30), dtype=np.uint8))
    with pytest.raises(DimensionTooLarge) as info:
        stopping_distance(H, exhaustive=True)
    assert info.value.cap == "cap-stopping-exhaustive-n"
    with pytest.raises(DimensionTooLarge) as info:
        stopping_distance(H, cap=20)
    assert info.value.cap == "cap-stopping-n"
