"""Stopping sets: membership, stopping distance and exhaustive listing.

Column index sets are reported 0-based as sorted tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DimensionTooLarge, IndexOutOfRange
from .gf2 import BinaryMatrix

DEFAULT_SEARCH_CAP = 40
DEFAULT_EXHAUSTIVE_CAP = 25


@dataclass(frozen=True)
class StoppingReport:
    stopping_distance: int | None
    smallest_sets: tuple[tuple[int, ...], ...]
    all_sets: tuple[tuple[int, ...], ...] | None = None

    @property
    def count(self) -> int:
        """Number of smallest stopping sets."""
        return len(self.smallest_sets)


def is_stopping_set(H: BinaryMatrix, S: Iterable[int]) -> bool:
    """True iff no row of ``H`` restricted to ``S`` has weight exactly one."""
    mask = 0
    for i in S:
        if not 0 <= i < H.cols:
            raise IndexOutOfRange(f"column {i} outside 0..{H.cols - 1}")
        mask |= 1 << i
    return _is_stopping_mask(H, mask)


def _is_stopping_mask(H: BinaryMatrix, mask: int) -> bool:
    return all((row & mask).bit_count() != 1 for row in H.row_masks)


def _mask_to_set(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class _Search:
    """Depth-first search over column subsets in increasing index order."""

    def __init__(self, H: BinaryMatrix) -> None:
        self.n = H.cols
        self.m = H.rows
        self.cols = [H.col_support(i) for i in range(H.cols)]
        # later[i]: rows that have a one in some column >= i.
        self.later = [0] * (self.n + 1)
        for i in range(self.n - 1, -1, -1):
            bits = 0
            for j in self.cols[i]:
                bits |= 1 << j
            self.later[i] = self.later[i + 1] | bits

    def sets_of_size(self, t: int) -> list[int]:
        found: list[int] = []
        self._fixed(t, 0, 0, 0, [0] * self.m, 0, found)
        return found

    def _fixed(self, t, start, chosen, size, counts, single, found) -> None:
        # single: bitset of rows hit exactly once by the chosen columns.
        if size == t:
            if not single:
                found.append(chosen)
            return
        # Every weight-one row must still be reachable by a later column.
        if single & ~self.later[start]:
            return
        for i in range(start, self.n - (t - size) + 1):
            new_single = single
            for j in self.cols[i]:
                counts[j] += 1
                if counts[j] == 1:
                    new_single |= 1 << j
                elif counts[j] == 2:
                    new_single &= ~(1 << j)
            self._fixed(t, i + 1, chosen | (1 << i), size + 1, counts, new_single, found)
            for j in self.cols[i]:
                counts[j] -= 1

    def all_sets(self) -> list[int]:
        found: list[int] = []
        self._any(0, 0, [0] * self.m, 0, found)
        return found

    def _any(self, i, chosen, counts, single, found) -> None:
        if single & ~self.later[i]:
            return
        if i == self.n:
            if chosen:
                found.append(chosen)
            return
        self._any(i + 1, chosen, counts, single, found)
        new_single = single
        for j in self.cols[i]:
            counts[j] += 1
            if counts[j] == 1:
                new_single |= 1 << j
            elif counts[j] == 2:
                new_single &= ~(1 << j)
        self._any(i + 1, chosen | (1 << i), counts, new_single, found)
        for j in self.cols[i]:
            counts[j] -= 1


def stopping_distance(
    H: BinaryMatrix,
    cap: int = DEFAULT_SEARCH_CAP,
    exhaustive: bool = False,
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP,
) -> StoppingReport:
    """Stopping distance and every smallest non-empty stopping set.

    Candidate sizes are tried in ascending order, so the first size with a
    hit is the stopping distance and the sweep at that size is complete.
    With ``exhaustive=True`` every non-empty stopping set is listed as well
    (ascending by size, then lexicographically).

    If no non-empty stopping set exists (possible only when some row of
    ``H`` has weight one) the distance is reported as None.
    """
    if H.cols > cap:
        raise DimensionTooLarge("cap-stopping-n", H.cols, cap)
    if exhaustive and H.cols > exhaustive_cap:
        raise DimensionTooLarge("cap-stopping-exhaustive-n", H.cols, exhaustive_cap)
    search = _Search(H)
    all_sets = None
    if exhaustive:
        masks = search.all_sets()
        all_sets = tuple(sorted((_mask_to_set(x) for x in masks), key=lambda s: (len(s), s)))
        if not all_sets:
            return StoppingReport(None, (), ())
        s = len(all_sets[0])
        smallest = tuple(x for x in all_sets if len(x) == s)
        return StoppingReport(s, smallest, all_sets)
    for t in range(1, H.cols + 1):
        masks = search.sets_of_size(t)
        if masks:
            return StoppingReport(t, tuple(sorted(_mask_to_set(x) for x in masks)))
    return StoppingReport(None, ())
