"""Command-line front end: ``pseudocone <command> ...``.

Exit status is 0 on success, 2 when a cap blocked part of a report (the
partial report is still written) and 1 on any error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from . import constructions
from .alist import load_matrix, to_alist
from .cone import DEFAULT_RAY_CAP
from .errors import PseudoconeError
from .gf2 import DEFAULT_CODEWORD_CAP
from .report import Caps, analyze, emit_report
from .simulation import DEFAULT_BATCH, simulate, to_csv
from .stopping import DEFAULT_EXHAUSTIVE_CAP, DEFAULT_SEARCH_CAP

EXIT_OK, EXIT_ERROR, EXIT_CAP = 0, 1, 2


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]


def _float_list(text: str) -> list[float]:
    return [float(t) for t in text.replace(",", " ").split()]


def _bits(text: str) -> list[int]:
    bits = [int(c) for c in text if c in "01"]
    if len(bits) != len([c for c in text if not c.isspace() and c != ","]):
        raise argparse.ArgumentTypeError("expected a string of 0/1 characters")
    return bits


RAY_FIELDS = ("source", "n", "m", "d_P", "d_P_decimal", "B_P", "edge_count", "rays", "caps", "blocked_by")


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1; status 2 is reserved for cap-exceeded reports
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--cap-ray-n", type=int, default=DEFAULT_RAY_CAP, help="largest n for ray enumeration")
    p.add_argument("--cap-codeword-k", type=int, default=DEFAULT_CODEWORD_CAP, help="largest k for codeword enumeration")
    p.add_argument("--cap-stopping-n", type=int, default=DEFAULT_SEARCH_CAP, help="largest n for the stopping-set search")
    p.add_argument(
        "--cap-stopping-exhaustive-n",
        type=int,
        default=DEFAULT_EXHAUSTIVE_CAP,
        help="largest n for listing every stopping set",
    )
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--threads", type=int, default=None, help="worker processes (default $PSEUDOCONE_THREADS or 1)")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings (non-deterministic)")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="pseudocone", description="Pseudo-codeword analysis of binary linear codes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    con = sub.add_parser("construct", parents=[common], help="build a matrix and write it as alist")
    kinds = con.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    c = kinds.add_parser("circulant", parents=[common], help="square circulant from its first row")
    c.add_argument("first_row", type=_bits, help="0/1 string, e.g. 1101000")
    h = kinds.add_parser("hamming-simplex", parents=[common], help="all non-zero simplex codewords as checks")
    h.add_argument("r", type=int)
    e = kinds.add_parser("eg", parents=[common], help="point-hyperplane incidence of EG(m, 2^s) minus the origin")
    e.add_argument("m", type=int)
    e.add_argument("s", type=int)
    e.add_argument("--ordering", choices=("affine", "cyclic"), default="cyclic")
    y = kinds.add_parser("cyclic", parents=[common], help="generator matrix of a cyclic code")
    y.add_argument("n", type=int)
    y.add_argument("exponents", type=_int_list, help="exponents of g(x), e.g. 0,1,3")

    a = sub.add_parser("analyze", parents=[common], help="structural analysis of a matrix file")
    a.add_argument("matrix")
    a.add_argument("--rays", action="store_true")
    a.add_argument("--stopping", action="store_true")
    a.add_argument("--exhaustive-stopping", action="store_true")
    a.add_argument("--min-distance", action="store_true")
    a.add_argument("--witness", type=_int_list, help="support of a codeword, for a bound-plus-witness distance")

    ce = sub.add_parser("certify", parents=[common], help="full analysis with the optimality certificate")
    ce.add_argument("matrix")
    ce.add_argument("--exhaustive-stopping", action="store_true")
    ce.add_argument("--witness", type=_int_list, help="support of a codeword, for a bound-plus-witness distance")

    r = sub.add_parser("rays", parents=[common], help="print the cone edge catalog")
    r.add_argument("matrix")

    s = sub.add_parser("simulate", parents=[common], help="LP versus ML word-error rates (CSV)")
    s.add_argument("matrix")
    s.add_argument("--snr", type=_float_list, required=True, help="E_b/N_0 values in dB, comma separated")
    s.add_argument("--trials", type=int, required=True, help="trials per point (maximum with --min-ml-errors)")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--min-ml-errors", type=int, default=None, help="stop a point after this many ML errors")
    s.add_argument("--batch", type=int, default=DEFAULT_BATCH)
    s.add_argument("--no-screen", action="store_true", help="run the simplex on every trial")
    return parser


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("PSEUDOCONE_THREADS", "")
    return max(1, int(env)) if env.strip() else 1


def _caps(args) -> Caps:
    return Caps(args.cap_ray_n, args.cap_codeword_k, args.cap_stopping_n, args.cap_stopping_exhaustive_n)


def _write(args, data: bytes) -> None:
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _witness(n: int, support: Sequence[int] | None) -> list[int] | None:
    if support is None:
        return None
    w = [0] * n
    for i in support:
        if not 0 <= i < n:
            raise PseudoconeError(f"witness index {i} outside 0..{n - 1}")
        w[i] = 1
    return w


def _construct(args) -> int:
    if args.kind == "circulant":
        H = constructions.circulant(args.first_row)
    elif args.kind == "hamming-simplex":
        H = constructions.hamming_simplex_H(args.r)
    elif args.kind == "eg":
        H = constructions.eg_point_hyperplane_H(args.m, args.s, args.ordering)
    else:
        H = constructions.cyclic_code_from_generator(args.n, args.exponents)
    _write(args, to_alist(H).encode())
    return EXIT_OK


def _report(args, H, fields=None, **kw) -> int:
    rep = analyze(H, {"file": Path(args.matrix).name}, caps=_caps(args), **kw)
    _write(args, emit_report(rep, args.format, args.timing, fields))
    return EXIT_CAP if rep.cap_exceeded else EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "construct":
            return _construct(args)
        H = load_matrix(args.matrix)
        if args.command == "analyze":
            return _report(
                args,
                H,
                rays=args.rays,
                stopping=args.stopping,
                exhaustive_stopping=args.exhaustive_stopping,
                distance=args.min_distance or args.witness is not None,
                certificate=False,
                witness=_witness(H.cols, args.witness),
            )
        if args.command == "certify":
            return _report(
                args,
                H,
                exhaustive_stopping=args.exhaustive_stopping,
                witness=_witness(H.cols, args.witness),
            )
        if args.command == "rays":
            return _report(args, H, RAY_FIELDS, stopping=False, distance=False, certificate=False)
        points = simulate(
            H,
            args.snr,
            args.trials,
            args.seed,
            min_ml_errors=args.min_ml_errors,
            batch=args.batch,
            screen=not args.no_screen,
            threads=_threads(args),
            ray_cap=args.cap_ray_n,
            codeword_cap=args.cap_codeword_k,
        )
        _write(args, to_csv(points).encode())
        return EXIT_OK
    except (PseudoconeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())
