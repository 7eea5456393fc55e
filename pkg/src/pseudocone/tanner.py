"""Tanner graph statistics: girth, degrees and column overlaps."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import ZeroMatrix
from .gf2 import BinaryMatrix

INFINITE = None  # girth of an acyclic graph


@dataclass(frozen=True)
class TannerGraph:
    """Bipartite view of a parity-check matrix.

    Variable nodes are columns ``0..n-1`` and check nodes are rows
    ``0..m-1``. ``girth`` is ``None`` when the graph has no cycle.
    """

    n: int
    m: int
    check_neighbors: tuple[tuple[int, ...], ...]
    variable_neighbors: tuple[tuple[int, ...], ...]
    girth: int | None
    min_col_weight: int
    max_col_weight: int
    row_weights: tuple[int, ...]
    max_pair_intersection: int

    @property
    def gamma(self) -> int:
        return self.min_col_weight

    @property
    def lam(self) -> int:
        return self.max_pair_intersection

    @property
    def col_weights(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.variable_neighbors)

    @property
    def uniform_column_weight(self) -> bool:
        return self.min_col_weight == self.max_col_weight

    @property
    def edges(self) -> int:
        return sum(self.row_weights)


def build(H: BinaryMatrix) -> TannerGraph:
    if H.is_zero():
        raise ZeroMatrix("parity-check matrix has no ones")
    checks = tuple(tuple(H.row_support(j)) for j in range(H.rows))
    variables = tuple(tuple(H.col_support(i)) for i in range(H.cols))
    col_w = [len(v) for v in variables]
    return TannerGraph(
        n=H.cols,
        m=H.rows,
        check_neighbors=checks,
        variable_neighbors=variables,
        girth=_girth(checks, variables),
        min_col_weight=min(col_w),
        max_col_weight=max(col_w),
        row_weights=tuple(len(c) for c in checks),
        max_pair_intersection=_max_pair_intersection(H),
    )


def girth(G: TannerGraph) -> int | None:
    return G.girth


def max_pair_intersection(G: TannerGraph) -> int:
    return G.max_pair_intersection


def _girth(checks, variables) -> int | None:
    # Nodes: variables are 0..n-1, checks are n..n+m-1.
    n = len(variables)
    adj = [[n + j for j in nb] for nb in variables] + [list(nb) for nb in checks]
    best: int | None = None
    for root in range(n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w == parent[u]:
                    continue
                if w in dist:
                    # Non-tree edge closes a walk through root of this length,
                    # which contains a cycle no longer than it.
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
                else:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
    return best


def _max_pair_intersection(H: BinaryMatrix) -> int:
    cols = H.col_masks
    best = 0
    for a, b in combinations(cols, 2):
        c = (a & b).bit_count()
        if c > best:
            best = c
    return best
