"""Full analysis of one parity-check matrix and its deterministic serialisation.

Every expensive step runs under a desk-scale cap. A step that would exceed
its cap is skipped, its fields stay ``"unknown"``, and ``blocked_by`` maps
each such field to the name of the cap.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .bounds import UNDETERMINED, bound_report, certify, certify_distance
from .cone import DEFAULT_RAY_CAP, RayCatalog, enumerate_rays
from .errors import DimensionTooLarge
from .gf2 import DEFAULT_CODEWORD_CAP, BinaryMatrix, code_parameters, dimension, enumerate_codewords, rank
from .stopping import DEFAULT_EXHAUSTIVE_CAP, DEFAULT_SEARCH_CAP, StoppingReport, stopping_distance
from .tanner import build

UNKNOWN = "unknown"
NOT_REQUESTED = "not-requested"


@dataclass(frozen=True)
class Caps:
    ray_n: int = DEFAULT_RAY_CAP
    codeword_k: int = DEFAULT_CODEWORD_CAP
    stopping_n: int = DEFAULT_SEARCH_CAP
    stopping_exhaustive_n: int = DEFAULT_EXHAUSTIVE_CAP


@dataclass
class AnalysisReport:
    source: dict[str, Any] = field(default_factory=dict)
    n: Any = UNKNOWN
    m: Any = UNKNOWN
    rank: Any = UNKNOWN
    k: Any = UNKNOWN
    girth: Any = UNKNOWN
    gamma: Any = UNKNOWN
    lam: Any = UNKNOWN
    d: Any = UNKNOWN
    A_d: Any = UNKNOWN
    d_source: Any = UNKNOWN
    weight_distribution: Any = UNKNOWN
    s: Any = UNKNOWN
    T_s: Any = UNKNOWN
    smallest_stopping_sets: Any = UNKNOWN
    all_stopping_sets: Any = UNKNOWN
    d_P: Any = UNKNOWN
    B_P: Any = UNKNOWN
    edge_count: Any = UNKNOWN
    rays: Any = UNKNOWN
    d_L: Any = UNKNOWN
    kv_bound: Any = UNKNOWN
    verdict: Any = UNKNOWN
    d_P_equals_d: Any = UNKNOWN
    B_P_equals_A_d: Any = UNKNOWN
    T_s_equals_A_d: Any = UNKNOWN
    checks: Any = UNKNOWN
    caps: dict[str, int] = field(default_factory=dict)
    blocked_by: dict[str, str] = field(default_factory=dict)
    timing: dict[str, float] = field(default_factory=dict)

    def block(self, fields: Sequence[str], cap: str) -> None:
        for f in fields:
            self.blocked_by.setdefault(f, cap)

    @property
    def cap_exceeded(self) -> bool:
        return bool(self.blocked_by)


_CODE_FIELDS = ("d", "A_d", "weight_distribution")
_STOP_FIELDS = ("s", "T_s", "smallest_stopping_sets")
_RAY_FIELDS = ("d_P", "B_P", "edge_count", "rays")
_CERT_FIELDS = ("verdict", "d_P_equals_d", "B_P_equals_A_d", "T_s_equals_A_d")


def analyze(
    H: BinaryMatrix,
    source: dict[str, Any] | None = None,
    *,
    rays: bool = True,
    stopping: bool = True,
    exhaustive_stopping: bool = False,
    distance: bool = True,
    certificate: bool = True,
    witness: Sequence[int] | None = None,
    caps: Caps = Caps(),
) -> AnalysisReport:
    """Run every requested analysis that fits within ``caps``.

    ``certificate`` needs the codewords, the stopping sets and the ray
    catalog; when any of them is blocked the verdict is ``undetermined``.
    ``witness`` (a 0/1 vector) lets the distance be certified from the
    bounds when exhaustive enumeration is over its cap.
    """
    rep = AnalysisReport(source=dict(source or {}))
    rep.caps = {
        "cap-ray-n": caps.ray_n,
        "cap-codeword-k": caps.codeword_k,
        "cap-stopping-n": caps.stopping_n,
        "cap-stopping-exhaustive-n": caps.stopping_exhaustive_n,
    }
    t0 = time.perf_counter()
    rep.n, rep.m = H.cols, H.rows
    rep.rank, rep.k = rank(H), dimension(H)
    graph = build(H)
    rep.girth, rep.gamma, rep.lam = graph.girth, graph.min_col_weight, graph.max_pair_intersection
    bounds = bound_report(graph)
    rep.d_L, rep.kv_bound = bounds.d_L, bounds.kv_bound
    rep.timing["structure"] = time.perf_counter() - t0

    codewords: list[int] | None = None
    if not exhaustive_stopping:
        rep.all_stopping_sets = NOT_REQUESTED
    if not certificate:
        for f in _CERT_FIELDS + ("checks",):
            setattr(rep, f, NOT_REQUESTED)
    if not (distance or certificate):
        for f in _CODE_FIELDS + ("d_source",):
            setattr(rep, f, NOT_REQUESTED)
    if not (stopping or exhaustive_stopping or certificate):
        for f in _STOP_FIELDS:
            setattr(rep, f, NOT_REQUESTED)
    if not (rays or certificate):
        for f in _RAY_FIELDS:
            setattr(rep, f, NOT_REQUESTED)

    if distance or certificate:
        t0 = time.perf_counter()
        try:
            params = code_parameters(H, caps.codeword_k)
            codewords = list(enumerate_codewords(H, caps.codeword_k))
            rep.d, rep.A_d, rep.d_source = params.d, params.A_d, params.d_source
            rep.weight_distribution = params.weight_distribution
        except DimensionTooLarge as exc:
            rep.block(_CODE_FIELDS, exc.cap)
            got = certify_distance(H, witness, graph) if witness is not None else None
            if got is not None and got.d is not None:
                rep.d, rep.d_source = got.d, got.d_source
                del rep.blocked_by["d"]
        rep.timing["distance"] = time.perf_counter() - t0

    stop: StoppingReport | None = None
    if stopping or exhaustive_stopping or certificate:
        t0 = time.perf_counter()
        try:
            stop = stopping_distance(H, caps.stopping_n)
            rep.s, rep.T_s = stop.stopping_distance, stop.count
            rep.smallest_stopping_sets = [list(x) for x in stop.smallest_sets]
        except DimensionTooLarge as exc:
            rep.block(_STOP_FIELDS, exc.cap)
        if exhaustive_stopping:
            try:
                full = stopping_distance(H, caps.stopping_n, True, caps.stopping_exhaustive_n)
                rep.all_stopping_sets = [list(x) for x in full.all_sets]
            except DimensionTooLarge as exc:
                rep.block(("all_stopping_sets",), exc.cap)
        rep.timing["stopping"] = time.perf_counter() - t0

    catalog: RayCatalog | None = None
    if rays or certificate:
        t0 = time.perf_counter()
        try:
            catalog = enumerate_rays(H, caps.ray_n)
            rep.d_P, rep.B_P, rep.edge_count = catalog.d_P, catalog.B_P, catalog.edge_count
            rep.rays = list(catalog.rays)
        except DimensionTooLarge as exc:
            rep.block(_RAY_FIELDS, exc.cap)
        rep.timing["rays"] = time.perf_counter() - t0

    if certificate:
        t0 = time.perf_counter()
        if codewords is not None and stop is not None and catalog is not None:
            cert = certify(H, codewords, stop, catalog, graph)
            rep.verdict = cert.verdict
            rep.d_P_equals_d = cert.d_P_equals_d
            rep.B_P_equals_A_d = cert.B_P_equals_A_d
            rep.T_s_equals_A_d = cert.T_s_equals_A_d
            rep.checks = list(cert.checks)
        else:
            rep.verdict = UNDETERMINED
            missing = [f for f in ("A_d", "s", "d_P") if f in rep.blocked_by]
            rep.block(_CERT_FIELDS[1:] + ("checks",), rep.blocked_by[missing[0]])
        rep.timing["certificate"] = time.perf_counter() - t0
    return rep


# serialisation -------------------------------------------------------------


def _rational(value: Any) -> Any:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


def _decimal(value: Any) -> Any:
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return float(value)
    return value


def _ray_table(rays: Any) -> Any:
    if not isinstance(rays, list):
        return rays
    return [
        {
            "representative": list(r.representative),
            "pseudo_weight": _rational(r.pseudo_weight),
            "pseudo_weight_decimal": float(r.pseudo_weight),
            "support": list(r.support),
            "classification": r.classification,
        }
        for r in rays
    ]


def report_dict(rep: AnalysisReport, include_timing: bool = False) -> dict[str, Any]:
    """Plain ordered dict of the report; rationals become ``"p/q"`` strings."""
    girth = "infinite" if rep.girth is None else rep.girth
    wd = rep.weight_distribution
    if isinstance(wd, dict):
        wd = {str(w): c for w, c in sorted(wd.items())}
    out: dict[str, Any] = {
        "source": dict(sorted(rep.source.items())),
        "n": rep.n,
        "m": rep.m,
        "rank": rep.rank,
        "k": rep.k,
        "girth": girth,
        "gamma": rep.gamma,
        "lambda": rep.lam,
        "d": rep.d,
        "A_d": rep.A_d,
        "d_source": rep.d_source,
        "weight_distribution": wd,
        "s": rep.s,
        "T_s": rep.T_s,
        "smallest_stopping_sets": rep.smallest_stopping_sets,
        "all_stopping_sets": rep.all_stopping_sets,
        "d_P": _rational(rep.d_P),
        "d_P_decimal": _decimal(rep.d_P),
        "B_P": rep.B_P,
        "edge_count": rep.edge_count,
        "d_L": rep.d_L,
        "kv_bound": _rational(rep.kv_bound),
        "kv_bound_decimal": _decimal(rep.kv_bound),
        "verdict": rep.verdict,
        "d_P_equals_d": rep.d_P_equals_d,
        "B_P_equals_A_d": rep.B_P_equals_A_d,
        "T_s_equals_A_d": rep.T_s_equals_A_d,
        "checks": rep.checks,
        "rays": _ray_table(rep.rays),
        "caps": dict(sorted(rep.caps.items())),
        "blocked_by": dict(sorted(rep.blocked_by.items())),
    }
    if include_timing:
        out["timing_s"] = {k: round(v, 6) for k, v in sorted(rep.timing.items())}
    return out


def _text_value(v: Any) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return str(v)


def emit_report(
    rep: AnalysisReport,
    format: str = "json",
    include_timing: bool = False,
    fields: Sequence[str] | None = None,
) -> bytes:
    """Serialise deterministically as ``json`` or ``text``.

    Wall-clock timings vary between runs, so they are left out unless
    ``include_timing`` is set. ``fields`` restricts the output to those
    keys, in report order.
    """
    data = report_dict(rep, include_timing)
    if fields is not None:
        data = {k: v for k, v in data.items() if k in fields}
    if format == "json":
        return _json_bytes(data)
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    rays = data.pop("rays", None)
    lines = [f"{key}: {_text_value(v)}" for key, v in data.items()]
    if isinstance(rays, list):
        lines.append("rays:")
        lines.append(ray_table_text(rays))
    elif rays is not None:
        lines.append(f"rays: {rays}")
    return ("\n".join(lines) + "\n").encode()


def _json_bytes(data: dict[str, Any]) -> bytes:
    # one top-level key per line; the ray table gets one ray per line
    parts = []
    for key, v in data.items():
        if key == "rays" and isinstance(v, list) and v:
            body = ",\n".join("    " + json.dumps(r) for r in v)
            parts.append(f'  {json.dumps(key)}: [\n{body}\n  ]')
        else:
            parts.append(f"  {json.dumps(key)}: {json.dumps(v)}")
    return ("{\n" + ",\n".join(parts) + "\n}\n").encode()


def ray_table_text(rows: list[dict[str, Any]]) -> str:
    out = [f"{'#':>4}  {'w_P':>10}  {'class':<17}  representative"]
    for idx, r in enumerate(rows):
        rep = " ".join(map(str, r["representative"]))
        out.append(f"{idx:>4}  {r['pseudo_weight']:>10}  {r['classification']:<17}  {rep}")
    return "\n".join(out)
