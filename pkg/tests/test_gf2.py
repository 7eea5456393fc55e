import itertools

import numpy as np
import pytest

from oracles import brute_force_codewords, random_parity_check
from pseudocone import BinaryMatrix, code_parameters, dimension, enumerate_codewords, is_codeword, min_distance, rank
from pseudocone.errors import DimensionTooLarge, LengthMismatch
from pseudocone.gf2 import mask_to_vector, nullspace_basis

from conftest import shifts


def test_rank_examples(ex1):
    assert rank(ex1) == 4
    assert dimension(ex1) == 3
    assert rank(BinaryMatrix(np.eye(3, dtype=np.uint8))) == 3
    assert rank(BinaryMatrix(np.zeros((2, 5), dtype=np.uint8))) == 0


def test_rank_invariant_under_row_operations():
    rng = np.random.default_rng(3)
    for _ in range(50):
        A = random_parity_check(rng, 10, 6, 5)
        r = rank(BinaryMatrix(A))
        perm = A[rng.permutation(A.shape[0])]
        assert rank(BinaryMatrix(perm)) == r
        if A.shape[0] > 1:
            B = A.copy()
            B[0] ^= B[1]
            assert rank(BinaryMatrix(B)) == r


def test_codewords_of_example_one(ex1):
    words = {tuple(int(b) for b in mask_to_vector(w, 7)) for w in enumerate_codewords(ex1)}
    assert words == {(0,) * 7} | shifts([1, 0, 1, 1, 1, 0, 0])


def test_single_check_code_is_trivial():
    assert list(enumerate_codewords(BinaryMatrix([[1]]))) == [0]


def test_hamming_weight_distribution(hamming):
    params = code_parameters(hamming)
    assert params.k == 4
    assert params.weight_distribution == {0: 1, 3: 7, 4: 7, 7: 1}
    assert params.d == 3 and params.A_d == 7 and params.d_source == "exhaustive"


def test_min_distance_examples(ex1, hamming):
    assert min_distance(ex1) == 4
    assert min_distance(hamming) == 3
    assert min_distance(BinaryMatrix([[1, 0, 1], [1, 0, 0]])) == 1


def test_is_codeword(ex1):
    assert is_codeword(ex1, [1, 0, 1, 1, 1, 0, 0])
    assert is_codeword(ex1, [0] * 7)
    assert not is_codeword(ex1, [1, 1, 0, 0, 0, 0, 0])
    with pytest.raises(LengthMismatch):
        is_codeword(ex1, [1, 0])


def test_codewords_match_syndrome_search_and_are_closed():
    rng = np.random.default_rng(5)
    for _ in range(40):
        A = random_parity_check(rng, 10, 6, 5)
        H = BinaryMatrix(A)
        masks = list(enumerate_codewords(H))
        assert len(masks) == len(set(masks)) == 2 ** dimension(H)
        got = {tuple(int(b) for b in mask_to_vector(w, H.cols)) for w in masks}
        assert got == set(brute_force_codewords(A))
        for a, b in itertools.islice(itertools.product(masks, repeat=2), 200):
            assert a ^ b in set(masks)
        weights = [sum(c) for c in got if any(c)]
        assert min_distance(H) == (min(weights) if weights else None)


def test_weight_distribution_sums_to_code_size():
    H = BinaryMatrix(random_parity_check(np.random.default_rng(8), 12, 5, 6))
    p = code_parameters(H)
    assert sum(p.weight_distribution.values()) == 2**p.k
    if p.d is not None:
        assert all(p.weight_distribution.get(w, 0) == 0 for w in range(1, p.d))


def test_nullspace_basis_spans_code(hamming):
    basis = nullspace_basis(hamming)
    assert len(basis) == 4
    assert all(is_codeword(hamming, mask_to_vector(b, 7)) for b in basis)


def test_enumeration_cap():
    H = BinaryMatrix(np.ones((1, 12), dtype=np.uint8))
    with pytest.raises(DimensionTooLarge) as info:
        list(enumerate_codewords(H, cap=10))
    assert info.value.cap == "cap-codeword-k"


def test_matrix_validation():
    with pytest.raises(ValueError):
        BinaryMatrix([[0, 2]])
    H = BinaryMatrix([[1, 0, 1]])
    with pytest.raises((ValueError, TypeError)):
        H.array[0, 0] = 0
    assert str(H) == "101"
