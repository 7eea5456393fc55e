"""Parity-check and generator matrices for the example code families."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionTooLarge, InvalidR, NotADivisor, ZeroRow
from .galois import GaloisField
from .gf2 import BinaryMatrix

EG_POINT_CAP = 1 << 16


def circulant(first_row: Sequence[int]) -> BinaryMatrix:
    """Square matrix whose row ``j`` is ``first_row`` cyclically shifted right by ``j``."""
    row = np.asarray(first_row, dtype=np.uint8)
    if not row.any():
        raise ZeroRow("first row of a circulant must be non-zero")
    return BinaryMatrix(np.stack([np.roll(row, j) for j in range(row.size)]))


def hamming_simplex_H(r: int) -> BinaryMatrix:
    """All non-zero codewords of the ``[2^r-1, r]`` simplex code, as rows.

    The null space is the ``[2^r-1, 2^r-1-r, 3]`` Hamming code. Every column
    has weight ``2^(r-1)`` and two distinct columns share ``2^(r-2)`` ones.
    """
    if r < 2:
        raise InvalidR(f"r must be at least 2, got {r}")
    n = (1 << r) - 1
    # Column i of the simplex generator is the binary expansion of i + 1.
    gen = np.array([[((i + 1) >> b) & 1 for i in range(n)] for b in range(r)], dtype=np.uint8)
    rows = []
    for msg in range(1, 1 << r):
        bits = np.array([(msg >> b) & 1 for b in range(r)], dtype=np.uint8)
        rows.append(bits @ gen % 2)
    return BinaryMatrix(np.array(rows))


def _affine_points(field: GaloisField, m: int) -> list[tuple[int, ...]]:
    # Point (x_0, ..., x_{m-1}) gets index sum x_k q^k; the origin is index 0.
    return [tuple(reversed(p)) for p in product(field.elements(), repeat=m)]


def _normalized_directions(field: GaloisField, m: int) -> list[tuple[int, ...]]:
    out = []
    for a in product(field.elements(), repeat=m):
        nz = [x for x in a if x]
        if nz and nz[0] == 1:
            out.append(a)
    return out


def eg_hyperplanes(m: int, s: int) -> tuple[list[tuple[int, ...]], list[tuple[tuple[int, ...], int]]]:
    """Points and all affine hyperplanes ``{x : a.x = b}`` of EG(m, 2^s).

    Hyperplane normals ``a`` are scaled so their first non-zero entry is 1.
    """
    field = GaloisField(s)
    points = _affine_points(field, m)
    planes = [(a, b) for a in _normalized_directions(field, m) for b in field.elements()]
    return points, planes


def eg_full_incidence(m: int, s: int) -> BinaryMatrix:
    """Hyperplane-by-point incidence of the complete geometry EG(m, 2^s)."""
    field = GaloisField(s)
    points, planes = eg_hyperplanes(m, s)
    return BinaryMatrix(
        np.array([[field.dot(a, p) == b for p in points] for a, b in planes], dtype=np.uint8)
    )


def eg_point_hyperplane_H(m: int, s: int, ordering: str = "affine") -> BinaryMatrix:
    """Point-hyperplane incidence of EG(m, 2^s) with the origin removed.

    Deleting the origin also deletes the ``(q^m - 1)/(q - 1)`` hyperplanes
    through it, leaving a square ``(q^m - 1)``-order matrix whose rows are
    hyperplanes. Column and row weights are ``q^(m-1)``.

    ``ordering="affine"`` lists points of GF(q)^m by base-q index and
    hyperplanes by (normal, offset). ``ordering="cyclic"`` identifies the
    points with powers of a primitive element of GF(q^m): column ``i`` is
    ``alpha^i`` and row ``j`` is ``{x : Tr(alpha^j x) = 1}``, which makes
    every row a cyclic shift of the first and the null space a cyclic code.
    """
    if m < 2 or s < 1:
        raise ValueError("need m >= 2 and s >= 1")
    q = 1 << s
    if q**m > EG_POINT_CAP:
        raise DimensionTooLarge("eg-points", q**m, EG_POINT_CAP)
    if ordering == "affine":
        field = GaloisField(s)
        points = _affine_points(field, m)[1:]
        rows = [
            [field.dot(a, p) == b for p in points]
            for a in _normalized_directions(field, m)
            for b in range(1, q)
        ]
        return BinaryMatrix(np.array(rows, dtype=np.uint8))
    if ordering == "cyclic":
        big = GaloisField(s * m)
        n = q**m - 1
        first = [big.trace(big.alpha_pow(i), s) == 1 for i in range(n)]
        # Row j is first shifted left by j: Tr(alpha^(i+j)) = first[i + j].
        return BinaryMatrix(np.array([np.roll(first, -j) for j in range(n)], dtype=np.uint8))
    raise ValueError(f"unknown ordering {ordering!r}")


def eg_dimension(m: int, s: int) -> int:
    """Dimension ``2^(sm) - (m+1)^s`` of the point-hyperplane EG code."""
    return 2 ** (s * m) - (m + 1) ** s


def poly_from_exponents(exponents: Iterable[int]) -> int:
    out = 0
    for e in exponents:
        out ^= 1 << e
    return out


def poly_mod(a: int, b: int) -> int:
    """Remainder of GF(2)[x] division; polynomials are bit patterns."""
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length()
    while a and a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def poly_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def cyclic_code_from_generator(n: int, g_exponents: Iterable[int]) -> BinaryMatrix:
    """Generator matrix of the length-``n`` cyclic code generated by ``g(x)``.

    Row ``i`` holds the coefficients of ``x^i g(x)``, so there are
    ``k = n - deg g`` rows.

    Raises
    ------
    NotADivisor
        If ``g(x)`` does not divide ``x^n - 1``.
    """
    g = poly_from_exponents(g_exponents)
    if g == 0:
        raise NotADivisor("zero polynomial")
    deg = g.bit_length() - 1
    if deg >= n and n > 0 and g != (1 << n) ^ 1:
        raise NotADivisor(f"deg g = {deg} is not below n = {n}")
    if poly_mod((1 << n) ^ 1, g):
        raise NotADivisor("g(x) does not divide x^n - 1")
    k = n - deg
    if k == 0:
        raise NotADivisor("g(x) = x^n - 1 generates the zero code")
    rows = [[(g << i) >> c & 1 for c in range(n)] for i in range(k)]
    return BinaryMatrix(np.array(rows, dtype=np.uint8))


def polynomial_vector(n: int, exponents: Iterable[int]) -> np.ndarray:
    """Coefficient vector of ``sum x^e`` (mod ``x^n - 1``) of length ``n``."""
    v = np.zeros(n, dtype=np.uint8)
    for e in exponents:
        v[e % n] ^= 1
    return v
