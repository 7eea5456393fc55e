"""Girth and column-overlap lower bounds and the optimality certificate.

Two lower bounds on the pseudo-weight of every non-zero pseudo-codeword
are evaluated:

* the girth bound ``d_L(gamma, g)`` for girth ``g >= 6`` and minimum column
  weight ``gamma``;
* the overlap bound ``gamma/lambda + 1`` when any two columns share at most
  ``lambda`` ones and ``gamma/lambda`` is an integer.

Each is attained exactly by the real multiples of codewords whose weight
equals the bound. ``certify`` checks both directions of that statement on
every edge of the cone and raises :class:`TheoremFalsified` on a violation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cone import Ray, RayCatalog
from .errors import GirthTooSmall, InconsistentInputs, InvalidGamma, TheoremFalsified
from .gf2 import BinaryMatrix, CodeParameters, is_codeword, rank
from .stopping import StoppingReport
from .tanner import TannerGraph, build

ASYMPTOTICALLY_OPTIMAL = "asymptotically-optimal"
NOT_OPTIMAL = "not-optimal"
UNDETERMINED = "undetermined"


def _check_args(gamma: int, g: int) -> None:
    if gamma < 2:
        raise InvalidGamma(f"column weight must be at least 2, got {gamma}")
    if g % 2:
        raise ValueError(f"girth must be even, got {g}")
    if g < 6:
        raise GirthTooSmall(f"bound needs girth >= 6, got {g}")


def tanner_bound_dL(gamma: int, g: int) -> int:
    """Tree-counting bound: ``1 + gamma + sum gamma (gamma-1)^i`` plus a tail term for ``g/2`` even."""
    _check_args(gamma, g)
    total = 1 + gamma
    if (g // 2) % 2:
        total += sum(gamma * (gamma - 1) ** i for i in range(1, (g - 6) // 4 + 1))
    else:
        total += sum(gamma * (gamma - 1) ** i for i in range(1, (g - 8) // 4 + 1))
        total += (gamma - 1) ** ((g - 4) // 4)
    return total


def _geometric(beta: int, k: int) -> int:
    # (beta^k - 1) / (beta - 1), continuous at beta = 1
    return k if beta == 1 else (beta**k - 1) // (beta - 1)


def tanner_bound_closed_form(gamma: int, g: int) -> int:
    """Same bound as :func:`tanner_bound_dL` via ``beta = gamma - 1``."""
    _check_args(gamma, g)
    beta = gamma - 1
    if (g // 2) % 2:
        e = (g - 2) // 4
        return beta**e + 2 * _geometric(beta, e)
    return 2 * _geometric(beta, g // 4)


def kv_bound(gamma: int, lam: int) -> Fraction | None:
    """``gamma/lam + 1``, or None when ``gamma/lam`` is not an integer."""
    if gamma < 1 or lam < 1:
        raise ValueError("gamma and lambda must be positive")
    if gamma % lam:
        return None
    return Fraction(gamma, lam) + 1


@dataclass(frozen=True)
class BoundReport:
    gamma: int
    lam: int
    girth: int | None
    d_L: int | None
    kv_bound: Fraction | None
    beta: int
    t: int | None

    @property
    def best(self) -> Fraction | None:
        """Largest applicable lower bound on d_P (and hence on s(H) and d)."""
        vals = [Fraction(v) for v in (self.d_L, self.kv_bound) if v is not None]
        return max(vals) if vals else None


def bound_report(G: TannerGraph) -> BoundReport:
    """Evaluate both bounds where their hypotheses hold on ``G``.

    The girth bound needs a finite girth of at least 6 and ``gamma >= 2``;
    for girth 4 (or an acyclic graph) only the overlap bound can apply.
    """
    gamma, lam, g = G.min_col_weight, G.max_pair_intersection, G.girth
    d_L = None
    if g is not None and g >= 6 and gamma >= 2:
        d_L = tanner_bound_dL(gamma, g)
    kv = kv_bound(gamma, lam) if gamma >= 1 and lam >= 1 else None
    t = (g - 6) // 4 if g is not None and g >= 6 else None
    return BoundReport(gamma, lam, g, d_L, kv, gamma - 1, t)


@dataclass(frozen=True)
class RayTightness:
    ray: Ray
    attains_bound: bool
    is_codeword_multiple: bool


@dataclass(frozen=True)
class OptimalityCertificate:
    d_P_equals_d: bool | None
    B_P_equals_A_d: bool | None
    T_s_equals_A_d: bool | None
    verdict: str
    per_ray_tightness: tuple[RayTightness, ...] = ()
    bounds: BoundReport | None = None
    checks: tuple[str, ...] = field(default=())


def _falsified(what: str, ray: Ray | None = None) -> TheoremFalsified:
    detail = ""
    if ray is not None:
        detail = (
            f"; ray={ray.representative} w_P={ray.pseudo_weight} "
            f"support={ray.support} class={ray.classification}"
        )
    return TheoremFalsified(what + detail, ray)


def _check_tightness(name, bound, catalog, codewords_at_bound, checks) -> None:
    for ray in catalog.rays:
        if ray.pseudo_weight < bound:
            raise _falsified(f"{name}: pseudo-weight below {bound}", ray)
        if ray.pseudo_weight == bound and not (
            ray.is_codeword_multiple and len(ray.support) == bound
        ):
            raise _falsified(f"{name}: ray attains {bound} but is not a weight-{bound} codeword multiple", ray)
    reps = catalog.representatives()
    for c in codewords_at_bound:
        if c not in reps:
            raise _falsified(f"{name}: weight-{bound} codeword {c} is not an edge of the cone")
    checks.append(f"{name}: all {catalog.edge_count} rays >= {bound}; equality iff weight-{bound} codeword")


def certify(
    H: BinaryMatrix,
    codewords: Iterable[int],
    stopping: StoppingReport,
    catalog: RayCatalog,
    graph: TannerGraph | None = None,
) -> OptimalityCertificate:
    """Asymptotic-optimality verdict plus theorem checks on every ray.

    ``codewords`` is the full code as bitsets (as produced by
    :func:`pseudocone.gf2.enumerate_codewords`). The verdict is
    ``asymptotically-optimal`` iff ``d_P = d`` and ``B_P = A_d``.

    Raises
    ------
    TheoremFalsified
        If a ray violates a bound or its equality characterisation.
    InconsistentInputs
        If the inputs visibly describe different matrices.
    """
    n = H.cols
    words = list(codewords)
    if any(w >> n for w in words):
        raise InconsistentInputs("codeword longer than the matrix")
    if any(len(r.representative) != n for r in catalog.rays):
        raise InconsistentInputs("ray length differs from the matrix")
    if any(not is_codeword(H, _bits(w, n)) for w in words):
        raise InconsistentInputs("a supplied codeword fails a parity check")
    graph = graph or build(H)
    bounds = bound_report(graph)
    checks: list[str] = []

    weights = [w.bit_count() for w in words if w]
    d = min(weights) if weights else None
    A_d = weights.count(d) if d is not None else None
    d_P, B_P = catalog.d_P, catalog.B_P
    s, T_s = stopping.stopping_distance, stopping.count

    def words_of_weight(target) -> list[tuple[int, ...]]:
        if Fraction(target).denominator != 1:
            return []
        return [tuple(_bits(w, n)) for w in words if w.bit_count() == target]

    if bounds.d_L is not None:
        _check_tightness("girth bound", bounds.d_L, catalog, words_of_weight(bounds.d_L), checks)
    if bounds.kv_bound is not None:
        _check_tightness("overlap bound", bounds.kv_bound, catalog, words_of_weight(bounds.kv_bound), checks)

    if d_P is not None and s is not None and d is not None:
        if not d_P <= s <= d:
            raise _falsified(f"chain d_P <= s(H) <= d broken: {d_P}, {s}, {d}")
        checks.append(f"d_P={d_P} <= s(H)={s} <= d={d}")
    if d is not None and bounds.d_L is not None and graph.uniform_column_weight:
        if d < bounds.d_L:
            raise _falsified(f"distance {d} below girth bound {bounds.d_L}")

    best = bounds.best
    per_ray = tuple(
        RayTightness(r, best is not None and r.pseudo_weight == best, r.is_codeword_multiple)
        for r in catalog.rays
    )
    if d is None or d_P is None:
        return OptimalityCertificate(None, None, None, UNDETERMINED, per_ray, bounds, tuple(checks))
    dp_eq = d_P == d
    bp_eq = B_P == A_d
    ts_eq = T_s == A_d if s is not None else None
    verdict = ASYMPTOTICALLY_OPTIMAL if dp_eq and bp_eq else NOT_OPTIMAL
    return OptimalityCertificate(dp_eq, bp_eq, ts_eq, verdict, per_ray, bounds, tuple(checks))


def _bits(mask: int, n: int) -> list[int]:
    return [(mask >> i) & 1 for i in range(n)]


def certify_distance(H: BinaryMatrix, witness: Sequence[int], graph: TannerGraph | None = None) -> CodeParameters:
    """Minimum distance from a lower bound met by an explicit codeword.

    Every applicable pseudo-weight bound also bounds ``d`` (``d >= d_P``).
    When ``witness`` is a codeword whose weight equals the ceiling of the
    best bound, ``d`` equals that weight. Otherwise ``d`` stays unknown.
    """
    graph = graph or build(H)
    bounds = bound_report(graph)
    k = H.cols - rank(H)
    best = bounds.best
    w = sum(1 for b in witness if b)
    if best is None or not any(witness) or not is_codeword(H, witness):
        return CodeParameters(H.cols, k, None, {}, "unknown")
    if w == math.ceil(best):
        return CodeParameters(H.cols, k, w, {}, "bound-plus-witness")
    return CodeParameters(H.cols, k, None, {}, "unknown")

