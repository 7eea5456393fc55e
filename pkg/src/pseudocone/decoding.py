"""LP and ML decoding for binary-input AWGN with BPSK (0 -> +1, 1 -> -1)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from numbers import Rational
from typing import Sequence

import numpy as np

from .errors import LengthMismatch, NonPositiveSigma, RowWeightTooLarge
from .gf2 import DEFAULT_CODEWORD_CAP, BinaryMatrix, enumerate_codewords, mask_to_vector
from .lp import solve_min

LLR_SCALE_BITS = 24
MAX_LP_ROW_WEIGHT = 12


def llr_awgn(y: Sequence[float], sigma: float) -> np.ndarray:
    """Channel LLRs ``2 y / sigma^2``."""
    if not sigma > 0:
        raise NonPositiveSigma(f"sigma must be positive, got {sigma}")
    return 2.0 * np.asarray(y, dtype=float) / sigma**2


def integer_costs(llr: Sequence) -> tuple[list[int], int]:
    """Integer cost vector and its scale, so that ``llr ~= costs / scale``.

    Exact rationals (ints, Fractions) are kept exactly by scaling with the
    common denominator. Floats are multiplied by ``2**24`` and rounded.
    """
    if all(isinstance(v, (Rational, np.integer)) for v in llr):
        vals = [Fraction(v) for v in llr]
        scale = reduce(math.lcm, (v.denominator for v in vals), 1)
        return [int(v * scale) for v in vals], scale
    scale = 1 << LLR_SCALE_BITS
    return [int(v) for v in np.rint(np.asarray(llr, dtype=float) * scale)], scale


def polytope_constraints(H: BinaryMatrix) -> tuple[list[list[int]], list[int]]:
    """Rows ``(A, b)`` with ``A x <= b`` describing the fundamental polytope.

    For each check with support ``N`` and each odd-size ``V`` in ``N``:
    ``sum_V x - sum_{N \\ V} x <= |V| - 1``; then ``x_i <= 1`` for each ``i``.
    Together with ``x >= 0`` (implicit) this is the intersection of the
    convex hulls of the single-check codes. Duplicate rows are dropped.
    """
    n = H.cols
    widest = max(H.row_weights())
    if widest > MAX_LP_ROW_WEIGHT:
        raise RowWeightTooLarge(widest, MAX_LP_ROW_WEIGHT)
    A: list[list[int]] = []
    b: list[int] = []
    seen = set()
    for j in range(H.rows):
        supp = H.row_support(j)
        for size in range(1, len(supp) + 1, 2):
            for V in combinations(supp, size):
                row = [0] * n
                for i in supp:
                    row[i] = -1
                for i in V:
                    row[i] = 1
                key = tuple(row)
                if key not in seen:
                    seen.add(key)
                    A.append(row)
                    b.append(size - 1)
    for i in range(n):
        A.append([int(k == i) for k in range(n)])
        b.append(1)
    return A, b


def in_polytope(H: BinaryMatrix, x: Sequence) -> bool:
    A, b = polytope_constraints(H)
    xs = [Fraction(v) for v in x]
    if any(v < 0 for v in xs):
        return False
    return all(sum(a * v for a, v in zip(row, xs) if a) <= rhs for row, rhs in zip(A, b))


@dataclass(frozen=True)
class LPDecodeResult:
    x: tuple[Fraction, ...]
    objective: Fraction
    integral: bool
    success: bool
    pivots: int = 0


@dataclass(frozen=True)
class MLDecodeResult:
    codeword: tuple[int, ...]
    objective: Fraction
    success: bool


@dataclass(frozen=True)
class DecodeOutcome:
    lp_optimum: tuple[Fraction, ...]
    lp_integral: bool
    lp_success: bool
    ml_codeword: tuple[int, ...]
    ml_success: bool
    objective_lp: Fraction
    objective_ml: Fraction


def lp_decode(
    H: BinaryMatrix,
    llr: Sequence,
    sent: Sequence[int] | None = None,
    constraints: tuple[list[list[int]], list[int]] | None = None,
) -> LPDecodeResult:
    """Minimise ``llr . x`` over the fundamental polytope, exactly.

    Success means the optimum equals ``sent`` (default all-zeros); a
    fractional optimum is always a failure. The objective is reported in
    LLR units of the rationalised costs.
    """
    n = H.cols
    if len(llr) != n:
        raise LengthMismatch(f"LLR vector has length {len(llr)}, expected {n}")
    A, b = constraints if constraints is not None else polytope_constraints(H)
    costs, scale = integer_costs(llr)
    sol = solve_min(A, b, costs)
    target = tuple(sent) if sent is not None else (0,) * n
    integral = all(v.denominator == 1 for v in sol.x)
    success = integral and tuple(int(v) for v in sol.x) == target
    return LPDecodeResult(sol.x, sol.objective / scale, integral, success, sol.pivots)


def ml_decode(
    H: BinaryMatrix,
    llr: Sequence,
    sent: Sequence[int] | None = None,
    cap: int = DEFAULT_CODEWORD_CAP,
) -> MLDecodeResult:
    """Codeword minimising ``llr . c``; ties go to the lexicographically smallest."""
    n = H.cols
    if len(llr) != n:
        raise LengthMismatch(f"LLR vector has length {len(llr)}, expected {n}")
    costs, scale = integer_costs(llr)
    best_key = None
    best = None
    for mask in enumerate_codewords(H, cap):
        word = tuple(int(v) for v in mask_to_vector(mask, n))
        key = (sum(c for c, bit in zip(costs, word) if bit), word)
        if best_key is None or key < best_key:
            best_key, best = key, word
    target = tuple(sent) if sent is not None else (0,) * n
    return MLDecodeResult(best, Fraction(best_key[0], scale), best == target)


def decode(H: BinaryMatrix, llr: Sequence, sent: Sequence[int] | None = None) -> DecodeOutcome:
    lp = lp_decode(H, llr, sent)
    ml = ml_decode(H, llr, sent)
    return DecodeOutcome(lp.x, lp.integral, lp.success, ml.codeword, ml.success, lp.objective, ml.objective)


def snr_to_sigma(snr_db: float, rate: float) -> float:
    """Noise standard deviation for ``E_b/N_0`` in dB at code rate ``rate``.

    ``sigma^2 = 1 / (2 R 10^(snr/10))`` with unit-energy BPSK symbols.
    """
    if rate <= 0:
        raise ValueError(f"code rate must be positive, got {rate}")
    return math.sqrt(1.0 / (2.0 * rate * 10.0 ** (snr_db / 10.0)))
