"""Dense GF(2) matrices and exhaustive code parameters.

Rows and columns are additionally kept as Python ints used as bitsets
(bit ``i`` of a row mask is column ``i``), which makes syndrome checks,
popcounts and Gray-code walks cheap.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionTooLarge, LengthMismatch

DEFAULT_CODEWORD_CAP = 28


class BinaryMatrix:
    """Immutable dense matrix over GF(2).

    Parameters
    ----------
    data : array_like
        Two-dimensional 0/1 data. Rows may be linearly dependent.
    """

    __slots__ = ("_array", "_row_masks", "_col_masks")

    def __init__(self, data) -> None:
        arr = np.asarray(data)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("matrix needs at least one row and one column")
        if not np.isin(arr, (0, 1)).all():
            raise ValueError("entries must be 0 or 1")
        arr = arr.astype(np.uint8)
        arr.setflags(write=False)
        self._array = arr
        self._row_masks = tuple(_pack(row) for row in arr)
        self._col_masks = tuple(_pack(col) for col in arr.T)

    @classmethod
    def from_row_masks(cls, masks: Sequence[int], cols: int) -> "BinaryMatrix":
        arr = np.array([[(mask >> i) & 1 for i in range(cols)] for mask in masks], dtype=np.uint8)
        return cls(arr)

    @property
    def array(self) -> np.ndarray:
        return self._array

    @property
    def rows(self) -> int:
        return self._array.shape[0]

    @property
    def cols(self) -> int:
        return self._array.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._array.shape

    @property
    def row_masks(self) -> tuple[int, ...]:
        return self._row_masks

    @property
    def col_masks(self) -> tuple[int, ...]:
        return self._col_masks

    def row_support(self, j: int) -> list[int]:
        return [int(i) for i in np.flatnonzero(self._array[j])]

    def col_support(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self._array[:, i])]

    def row_weights(self) -> list[int]:
        return [m.bit_count() for m in self._row_masks]

    def col_weights(self) -> list[int]:
        return [m.bit_count() for m in self._col_masks]

    def is_zero(self) -> bool:
        return not any(self._row_masks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.shape == other.shape and self._row_masks == other._row_masks

    def __hash__(self) -> int:
        return hash((self.shape, self._row_masks))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows}x{self.cols})"

    def __str__(self) -> str:
        return "\n".join("".join(str(int(b)) for b in row) for row in self._array)


def _pack(bits: Iterable[int]) -> int:
    mask = 0
    for i, b in enumerate(bits):
        if b:
            mask |= 1 << i
    return mask


def vector_to_mask(c: Sequence[int]) -> int:
    return _pack(int(b) & 1 for b in c)


def mask_to_vector(mask: int, n: int) -> np.ndarray:
    return np.array([(mask >> i) & 1 for i in range(n)], dtype=np.uint8)


def _echelon(masks: Sequence[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of bitset rows; returns (rows, pivot bits)."""
    rows: list[int] = []
    pivots: list[int] = []
    for mask in masks:
        for r, p in zip(rows, pivots):
            if mask >> p & 1:
                mask ^= r
        if mask:
            p = (mask & -mask).bit_length() - 1
            for idx, r in enumerate(rows):
                if r >> p & 1:
                    rows[idx] = r ^ mask
            rows.append(mask)
            pivots.append(p)
    return rows, pivots


def rank(H: BinaryMatrix) -> int:
    """Row rank of ``H`` over GF(2)."""
    return len(_echelon(H.row_masks)[0])


def dimension(H: BinaryMatrix) -> int:
    """Dimension ``k = n - rank(H)`` of the code with parity-check matrix ``H``."""
    return H.cols - rank(H)


def nullspace_basis(H: BinaryMatrix) -> list[int]:
    """Basis of the GF(2) null space of ``H`` as column bitsets."""
    rows, pivots = _echelon(H.row_masks)
    pivot_set = set(pivots)
    basis = []
    for free in range(H.cols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for r, p in zip(rows, pivots):
            if r >> free & 1:
                vec |= 1 << p
        basis.append(vec)
    return basis


def enumerate_codewords(H: BinaryMatrix, cap: int = DEFAULT_CODEWORD_CAP) -> Iterator[int]:
    """Yield every codeword of the null space of ``H`` exactly once.

    Codewords are bitsets (bit ``i`` is coordinate ``i``), produced in
    Gray-code order over the information bits so each step is one XOR.
    The zero word comes first.

    Raises
    ------
    DimensionTooLarge
        If the dimension exceeds ``cap``.
    """
    basis = nullspace_basis(H)
    k = len(basis)
    if k > cap:
        raise DimensionTooLarge("cap-codeword-k", k, cap)
    word = 0
    yield word
    for step in range(1, 1 << k):
        word ^= basis[(step & -step).bit_length() - 1]
        yield word


def codeword_matrix(H: BinaryMatrix, cap: int = DEFAULT_CODEWORD_CAP) -> np.ndarray:
    """All codewords as rows of a ``(2**k, n)`` uint8 array, sorted lexicographically."""
    words = sorted(enumerate_codewords(H, cap), key=lambda w: mask_to_vector(w, H.cols).tolist())
    return np.array([mask_to_vector(w, H.cols) for w in words], dtype=np.uint8).reshape(-1, H.cols)


def is_codeword(H: BinaryMatrix, c: Sequence[int]) -> bool:
    if len(c) != H.cols:
        raise LengthMismatch(f"vector has length {len(c)}, expected {H.cols}")
    mask = vector_to_mask(c)
    return all((row & mask).bit_count() % 2 == 0 for row in H.row_masks)


def is_codeword_mask(H: BinaryMatrix, mask: int) -> bool:
    return all((row & mask).bit_count() % 2 == 0 for row in H.row_masks)


@dataclass(frozen=True)
class CodeParameters:
    """Length, dimension and (when known) distance data of a binary code.

    ``d_source`` is one of ``"exhaustive"``, ``"bound-plus-witness"`` or
    ``"unknown"``. ``weight_distribution`` is empty unless enumeration ran.
    """

    n: int
    k: int
    d: int | None
    weight_distribution: dict[int, int] = field(default_factory=dict)
    d_source: str = "unknown"

    @property
    def A_d(self) -> int | None:
        if self.d is None or not self.weight_distribution:
            return None
        return self.weight_distribution.get(self.d, 0)


def code_parameters(H: BinaryMatrix, cap: int = DEFAULT_CODEWORD_CAP) -> CodeParameters:
    """Exhaustive ``[n, k, d]`` and weight distribution.

    A code of dimension zero has no non-zero codewords; its distance is
    reported as ``None`` with source ``"unknown"``.
    """
    counts = Counter(w.bit_count() for w in enumerate_codewords(H, cap))
    k = dimension(H)
    nonzero = [w for w in counts if w > 0]
    dist = dict(sorted(counts.items()))
    if not nonzero:
        return CodeParameters(H.cols, k, None, dist, "unknown")
    return CodeParameters(H.cols, k, min(nonzero), dist, "exhaustive")


def min_distance(H: BinaryMatrix, cap: int = DEFAULT_CODEWORD_CAP) -> int | None:
    return code_parameters(H, cap).d
