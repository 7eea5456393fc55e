"""Reading and writing parity-check matrices.

The main format is alist::

    n m
    max_col_weight max_row_weight
    col weights (n numbers)
    row weights (m numbers)
    n lines: 1-based check indices of each column, 0-padded to max_col_weight
    m lines: 1-based variable indices of each row, 0-padded to max_row_weight

A dense fallback (one row of 0/1 characters per line, optional spaces) is
accepted too. Text is read as alist when its first line is a pair of
integers, unless every line is a 0/1 row of the same length.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .errors import InconsistentAdjacency, ParseError
from .gf2 import BinaryMatrix

_DENSE_ROW = re.compile(r"^[01](\s*[01])*$")


class _Lines:
    def __init__(self, text: str) -> None:
        self.lines = [(no, line.split()) for no, line in enumerate(text.splitlines(), 1) if line.strip()]
        self.pos = 0

    def ints(self, count: int | None, what: str) -> tuple[list[int], int]:
        if self.pos >= len(self.lines):
            last = self.lines[-1][0] + 1 if self.lines else 1
            raise ParseError(f"unexpected end of input, expected {what}", last)
        no, toks = self.lines[self.pos]
        self.pos += 1
        try:
            vals = [int(t) for t in toks]
        except ValueError:
            raise ParseError(f"non-integer token in {what}", no) from None
        if count is not None and len(vals) != count:
            raise ParseError(f"expected {count} numbers for {what}, got {len(vals)}", no)
        return vals, no


def parse_alist(text: str) -> BinaryMatrix:
    """Parse alist text into a matrix.

    Raises ``ParseError`` (with a 1-based line number) on malformed input
    and ``InconsistentAdjacency`` when the column and row lists disagree.
    """
    src = _Lines(text)
    (n, m), no = src.ints(2, "header 'n m'")
    if n < 1 or m < 1:
        raise ParseError("dimensions must be positive", no)
    (max_c, max_r), no = src.ints(2, "maximum degrees")
    col_w, no = src.ints(n, "column weights")
    if any(w < 0 or w > max_c for w in col_w):
        raise ParseError("column weight outside 0..max", no)
    row_w, no = src.ints(m, "row weights")
    if any(w < 0 or w > max_r for w in row_w):
        raise ParseError("row weight outside 0..max", no)

    def neighbours(count, width, bound, weights, what):
        out = []
        for idx in range(count):
            vals, no = src.ints(None, f"{what} {idx + 1}")
            if len(vals) not in (weights[idx], width, max(width, 1)):
                raise ParseError(f"{what} {idx + 1} has {len(vals)} entries", no)
            nz = [v for v in vals if v]
            if len(nz) != weights[idx] or any(v < 1 or v > bound for v in nz):
                raise ParseError(f"{what} {idx + 1} does not match its weight or range", no)
            if len(set(nz)) != len(nz):
                raise ParseError(f"{what} {idx + 1} repeats an index", no)
            if any(vals[len(nz):]) or 0 in vals[: len(nz)]:
                raise ParseError(f"{what} {idx + 1} has zero padding in the middle", no)
            out.append({v - 1 for v in nz})
        return out

    cols = neighbours(n, max_c, m, col_w, "column")
    rows = neighbours(m, max_r, n, row_w, "row")
    if src.pos != len(src.lines):
        raise ParseError("trailing content after row lists", src.lines[src.pos][0])
    A = np.zeros((m, n), dtype=np.uint8)
    for j, supp in enumerate(rows):
        A[j, sorted(supp)] = 1
    B = np.zeros((m, n), dtype=np.uint8)
    for i, supp in enumerate(cols):
        B[sorted(supp), i] = 1
    if not np.array_equal(A, B):
        raise InconsistentAdjacency("column and row lists describe different matrices")
    return BinaryMatrix(A)


def parse_dense(text: str) -> BinaryMatrix:
    rows = []
    for no, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s:
            continue
        if not _DENSE_ROW.match(s):
            raise ParseError("dense rows may contain only 0 and 1", no)
        rows.append([int(c) for c in s if c in "01"])
        if len(rows[-1]) != len(rows[0]):
            raise ParseError("dense rows have different lengths", no)
    if not rows:
        raise ParseError("empty matrix", 1)
    return BinaryMatrix(np.array(rows, dtype=np.uint8))


def parse_matrix(text: str) -> BinaryMatrix:
    """Parse alist or dense 0/1 text, chosen by the header shape."""
    first = next((l.split() for l in text.splitlines() if l.strip()), None)
    if first is None:
        raise ParseError("empty input", 1)
    dense = all(_DENSE_ROW.match(l.strip()) for l in text.splitlines() if l.strip())
    header_pair = len(first) == 2 and all(t.isdigit() for t in first)
    if header_pair and not (dense and _uniform_dense(text)):
        return parse_alist(text)
    return parse_dense(text)


def _uniform_dense(text: str) -> bool:
    lengths = {len(l.split()) if " " in l.strip() else len(l.strip()) for l in text.splitlines() if l.strip()}
    return len(lengths) == 1


def to_alist(H: BinaryMatrix) -> str:
    """Serialise ``H`` as alist text (0-padded, newline-terminated)."""
    cols = [H.col_support(i) for i in range(H.cols)]
    rows = [H.row_support(j) for j in range(H.rows)]
    max_c = max((len(c) for c in cols), default=0)
    max_r = max((len(r) for r in rows), default=0)

    def padded(idx, width):
        vals = [v + 1 for v in idx] + [0] * (max(width, 1) - len(idx))
        return " ".join(map(str, vals))

    lines = [
        f"{H.cols} {H.rows}",
        f"{max_c} {max_r}",
        " ".join(str(len(c)) for c in cols),
        " ".join(str(len(r)) for r in rows),
    ]
    lines += [padded(c, max_c) for c in cols]
    lines += [padded(r, max_r) for r in rows]
    return "\n".join(lines) + "\n"


def load_matrix(path: str | Path) -> BinaryMatrix:
    return parse_matrix(Path(path).read_text())


def save_alist(H: BinaryMatrix, path: str | Path) -> None:
    Path(path).write_text(to_alist(H))
