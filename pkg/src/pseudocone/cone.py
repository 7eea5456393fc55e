"""The fundamental cone: inequalities, membership, pseudo-weight and edges.

Everything here is exact. Ray representatives are primitive non-negative
integer vectors (tuples of Python ints) and pseudo-weights are
``fractions.Fraction``.

Edge enumeration uses the double description method: start from the
non-negative orthant, whose extreme rays are the unit vectors, and add the
remaining inequalities one at a time. When inequality ``a`` is added, rays
with ``a.r < 0`` are dropped and every adjacent pair ``(p, q)`` with
``a.p > 0 > a.q`` contributes the new ray ``(a.p) q - (a.q) p`` on the
hyperplane ``a.x = 0``. Two rays are adjacent when the processed
inequalities active on both have rank ``n - 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .errors import DegenerateConeNotPointed, DimensionTooLarge, LengthMismatch, NegativeCoordinate, ZeroVector
from .gf2 import BinaryMatrix, is_codeword_mask

DEFAULT_RAY_CAP = 20

# Mersenne prime; ranks mod this prime equal rational ranks whenever every
# minor is smaller in absolute value (checked via the Hadamard bound).
_PRIME = (1 << 61) - 1

CODEWORD_MULTIPLE = "codeword-multiple"
NON_CODEWORD = "non-codeword"


def cone_inequalities(H: BinaryMatrix) -> list[tuple[int, ...]]:
    """Rows ``a`` with ``a.x >= 0`` cutting out the fundamental cone.

    The first ``n`` rows are ``x_i >= 0``. Then, row by row of ``H`` and for
    each ``i`` in its support (ascending), the row
    ``sum_{l in supp \\ {i}} x_l - x_i >= 0``.
    """
    n = H.cols
    rows = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    for j in range(H.rows):
        supp = H.row_support(j)
        for i in supp:
            row = [0] * n
            for l in supp:
                row[l] = -1 if l == i else 1
            rows.append(tuple(row))
    return rows


def _as_fractions(x: Sequence) -> list[Fraction]:
    return [Fraction(v) for v in x]


def is_pseudo_codeword(H: BinaryMatrix, x: Sequence) -> bool:
    """Exact membership of ``x`` in the fundamental cone."""
    if len(x) != H.cols:
        raise LengthMismatch(f"vector has length {len(x)}, expected {H.cols}")
    xs = _as_fractions(x)
    if any(v < 0 for v in xs):
        return False
    for j in range(H.rows):
        supp = H.row_support(j)
        total = sum(xs[l] for l in supp)
        # sum over supp minus x_i >= x_i  <=>  total >= 2 x_i
        if any(2 * xs[i] > total for i in supp):
            return False
    return True


def pseudo_weight(x: Sequence) -> Fraction:
    """AWGN pseudo-weight ``(sum |x_i|)^2 / sum x_i^2``, exactly."""
    xs = _as_fractions(x)
    l2 = sum(v * v for v in xs)
    if l2 == 0:
        raise ZeroVector("pseudo-weight of the zero vector is undefined")
    l1 = sum(abs(v) for v in xs)
    return l1 * l1 / l2


def canonicalize(x: Sequence) -> tuple[int, ...]:
    """Primitive integer representative of the ray ``{a x : a > 0}``."""
    xs = _as_fractions(x)
    if any(v < 0 for v in xs):
        raise NegativeCoordinate("pseudo-codewords have non-negative coordinates")
    if not any(xs):
        raise ZeroVector("the zero vector spans no ray")
    lcm = reduce(math.lcm, (v.denominator for v in xs), 1)
    ints = [int(v * lcm) for v in xs]
    g = reduce(math.gcd, ints)
    return tuple(v // g for v in ints)


@dataclass(frozen=True)
class Ray:
    representative: tuple[int, ...]
    pseudo_weight: Fraction
    support: tuple[int, ...]
    classification: str

    @property
    def is_codeword_multiple(self) -> bool:
        return self.classification == CODEWORD_MULTIPLE


def make_ray(H: BinaryMatrix, x: Sequence) -> Ray:
    rep = canonicalize(x)
    support = tuple(i for i, v in enumerate(rep) if v)
    mask = sum(1 << i for i in support)
    equal = len({rep[i] for i in support}) == 1
    cls = CODEWORD_MULTIPLE if equal and is_codeword_mask(H, mask) else NON_CODEWORD
    return Ray(rep, pseudo_weight(rep), support, cls)


@dataclass(frozen=True)
class RayCatalog:
    """Complete set of cone edges, sorted by pseudo-weight then representative."""

    rays: tuple[Ray, ...]

    @property
    def edge_count(self) -> int:
        return len(self.rays)

    @property
    def d_P(self) -> Fraction | None:
        return self.rays[0].pseudo_weight if self.rays else None

    @property
    def B_P(self) -> int:
        d = self.d_P
        return sum(1 for r in self.rays if r.pseudo_weight == d)

    @property
    def minimum_rays(self) -> tuple[Ray, ...]:
        d = self.d_P
        return tuple(r for r in self.rays if r.pseudo_weight == d)

    def representatives(self) -> set[tuple[int, ...]]:
        return {r.representative for r in self.rays}


def catalog_from_vectors(H: BinaryMatrix, vectors) -> RayCatalog:
    rays = {}
    for v in vectors:
        ray = make_ray(H, v)
        rays[ray.representative] = ray
    ordered = sorted(rays.values(), key=lambda r: (r.pseudo_weight, r.representative))
    return RayCatalog(tuple(ordered))


class _RankOracle:
    """Exact rank of subsets of a fixed list of small integer rows."""

    def __init__(self, rows: Sequence[Sequence[int]], n: int) -> None:
        self.rows = rows
        self.n = n
        self.cache: dict[int, int] = {}
        # Hadamard: |minor| <= prod of row 2-norms over the chosen rows.
        norms = sorted((math.sqrt(sum(v * v for v in r)) for r in rows), reverse=True)
        bound = math.prod(norms[:n]) if norms else 1.0
        self.modular = bound < _PRIME / 2

    def rank(self, mask: int) -> int:
        got = self.cache.get(mask)
        if got is None:
            chosen = [self.rows[k] for k in _bits(mask)]
            got = _rank_mod(chosen, self.n) if self.modular else _rank_exact(chosen, self.n)
            self.cache[mask] = got
        return got


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _rank_mod(rows: Sequence[Sequence[int]], n: int) -> int:
    basis: dict[int, list[int]] = {}  # pivot column -> row normalized to 1 there
    for row in rows:
        v = [x % _PRIME for x in row]
        for col in range(n):
            if not v[col]:
                continue
            piv = basis.get(col)
            if piv is None:
                inv = pow(v[col], _PRIME - 2, _PRIME)
                basis[col] = [x * inv % _PRIME for x in v]
                break
            f = v[col]
            v = [(a - f * b) % _PRIME for a, b in zip(v, piv)]
        if len(basis) == n:
            break
    return len(basis)


def _rank_exact(rows: Sequence[Sequence[int]], n: int) -> int:
    mat = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(rank + 1, len(mat)):
            if mat[i][col]:
                f = mat[i][col] / mat[rank][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def _primitive(v: list[int]) -> tuple[int, ...]:
    g = reduce(math.gcd, v)
    return tuple(x // g for x in v)


def _dedupe(rows: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for r in rows:
        if r not in seen:
            seen.add(r)
            out.append(r)
    return out


def extreme_rays(inequalities: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """Extreme rays of ``{x : a.x >= 0 for every a}`` by double description.

    The first ``n`` inequalities must be the unit rows ``x_i >= 0`` in order;
    the cone is then pointed and the iteration starts from the orthant.
    """
    rows = [tuple(r) for r in inequalities]
    if [r for r in rows[:n]] != [tuple(int(i == k) for k in range(n)) for i in range(n)]:
        raise ValueError("the first n inequalities must be x_i >= 0 in coordinate order")
    ranker = _RankOracle(rows, n)
    if ranker.rank((1 << len(rows)) - 1) != n:
        raise DegenerateConeNotPointed("inequality system has a non-trivial lineality space")
    full = (1 << n) - 1
    # (vector, bitset of processed inequalities that are tight on it)
    rays: list[tuple[tuple[int, ...], int]] = [
        (tuple(int(i == k) for k in range(n)), full & ~(1 << i)) for i in range(n)
    ]
    for k in range(n, len(rows)):
        a = rows[k]
        pos, zero, neg = [], [], []
        for vec, z in rays:
            s = sum(x * y for x, y in zip(a, vec) if y)
            if s > 0:
                pos.append((vec, z, s))
            elif s < 0:
                neg.append((vec, z, s))
            else:
                zero.append((vec, z | (1 << k)))
        if not neg:
            rays = [(v, z) for v, z, _ in pos] + zero
            continue
        created: dict[tuple[int, ...], int] = {}
        for pv, pz, ps in pos:
            for qv, qz, qs in neg:
                common = pz & qz
                if common.bit_count() < n - 2 or ranker.rank(common) != n - 2:
                    continue
                new = _primitive([ps * y - qs * x for x, y in zip(pv, qv)])
                if any(new):
                    created[new] = common | (1 << k)
        rays = [(v, z) for v, z, _ in pos] + zero + list(created.items())
    return [v for v, _ in rays]


def enumerate_rays(H: BinaryMatrix, cap: int = DEFAULT_RAY_CAP) -> RayCatalog:
    """Every edge of the fundamental cone of ``H`` with exact pseudo-weights.

    Duplicate inequalities (from repeated rows of ``H``) are dropped first;
    the cone is unchanged. Worst-case cost is exponential, hence ``cap`` on
    the code length.
    """
    if H.cols > cap:
        raise DimensionTooLarge("cap-ray-n", H.cols, cap)
    rows = _dedupe(cone_inequalities(H))
    return catalog_from_vectors(H, extreme_rays(rows, H.cols))
