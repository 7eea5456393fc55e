"""Exact primal simplex for ``min c.x  s.t.  A x <= b, x >= 0`` with ``b >= 0``.

The tableau is kept integral by fraction-free (integer-preserving)
pivoting: the true tableau is ``T / D`` and a pivot on ``p = T[r, e]``
replaces every other row by ``(p T_i - T_ie T_r) / D`` (an exact integer
division) and sets ``D = p``. Entering and leaving variables follow Bland's
rule, which rules out cycling on degenerate vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import Unbounded


@dataclass(frozen=True)
class LPSolution:
    x: tuple[Fraction, ...]
    objective: Fraction
    pivots: int
    visited: tuple[tuple[Fraction, ...], ...] = ()


def solve_min(
    A: Sequence[Sequence[int]],
    b: Sequence[int],
    c: Sequence[int],
    record_path: bool = False,
) -> LPSolution:
    """Minimise ``c.x`` over ``{x >= 0 : A x <= b}`` exactly.

    All inputs are integers and ``b`` must be non-negative so that the
    slack basis is a feasible start. ``record_path`` keeps every basic
    solution visited, in order.
    """
    m = len(A)
    n = len(c)
    if any(v < 0 for v in b):
        raise ValueError("right-hand side must be non-negative")
    width = n + m
    T = np.zeros((m + 1, width + 1), dtype=object)
    T[:, :] = 0
    for i, row in enumerate(A):
        if len(row) != n:
            raise ValueError("constraint row length does not match objective")
        T[i, :n] = [int(v) for v in row]
        T[i, n + i] = 1
        T[i, width] = int(b[i])
    T[m, :n] = [int(v) for v in c]
    basis = list(range(n, n + m))
    D = 1
    pivots = 0
    path: list[tuple[Fraction, ...]] = []

    def current_x() -> tuple[Fraction, ...]:
        x = [Fraction(0)] * n
        for i, var in enumerate(basis):
            if var < n:
                x[var] = Fraction(T[i, width], D)
        return tuple(x)

    if record_path:
        path.append(current_x())
    while True:
        cost = T[m, :width]
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        col = T[:m, entering]
        leave = None
        for i in range(m):
            if col[i] > 0:
                if leave is None:
                    leave = i
                    continue
                # ratio rhs_i / col_i versus the incumbent, by cross-multiplication
                lhs = T[i, width] * col[leave]
                rhs = T[leave, width] * col[i]
                if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                    leave = i
        if leave is None:
            raise Unbounded("objective decreases without bound")
        p = T[leave, entering]
        pivot_row = T[leave].copy()
        factors = T[:, entering].copy()
        T = (p * T - np.outer(factors, pivot_row)) // D
        T[leave] = pivot_row
        D = p
        basis[leave] = entering
        pivots += 1
        if record_path:
            path.append(current_x())
    x = current_x()
    obj = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPSolution(x, obj, pivots, tuple(path))
