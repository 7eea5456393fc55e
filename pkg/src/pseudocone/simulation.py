"""Monte-Carlo word-error rates of LP and ML decoding on the BPSK/AWGN channel.

The all-zeros codeword is sent, so every received symbol is ``1 + sigma z``.
Noise for trial ``t`` at SNR index ``i`` comes from a Philox stream keyed by
``(seed, i)`` at counter ``t * ceil(n/4)``, so a trial's noise does not
depend on batch size or on how batches are spread over worker processes.

LP success is screened exactly with the cone edges: the zero vector is the
unique LP optimum iff every edge ``r`` has ``costs . r > 0``. Trials that
fail the screen (or tie) are handed to the exact simplex, whose verdict is
what gets counted; the screen is cross-checked against it.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.special import ndtri

from .cone import DEFAULT_RAY_CAP, enumerate_rays
from .decoding import LLR_SCALE_BITS, lp_decode, polytope_constraints, snr_to_sigma
from .errors import DimensionTooLarge
from .gf2 import DEFAULT_CODEWORD_CAP, BinaryMatrix, codeword_matrix, dimension

CSV_COLUMNS = ("snr_db", "trials", "errors_lp", "errors_ml", "wer_lp", "wer_ml", "ratio")
DEFAULT_BATCH = 20_000


@dataclass(frozen=True)
class SimulationPoint:
    snr_db: float
    trials: int
    errors_lp: int
    errors_ml: int

    @property
    def wer_lp(self) -> float:
        return self.errors_lp / self.trials if self.trials else float("nan")

    @property
    def wer_ml(self) -> float:
        return self.errors_ml / self.trials if self.trials else float("nan")

    @property
    def ratio(self) -> float:
        """``WER_LP / WER_ML``; NaN when no ML error was seen."""
        return self.errors_lp / self.errors_ml if self.errors_ml else float("nan")


def stream_key(seed: int, snr_index: int) -> np.ndarray:
    return np.random.SeedSequence([int(seed), int(snr_index)]).generate_state(2, np.uint64)


def trial_noise(key: np.ndarray, n: int, start: int, stop: int) -> np.ndarray:
    """Standard normal noise for trials ``start..stop-1``, shape ``(stop-start, n)``."""
    blocks = -(-n // 4)
    gen = np.random.Philox(key=key, counter=start * blocks)
    raw = gen.random_raw((stop - start) * blocks * 4).reshape(stop - start, blocks * 4)[:, :n]
    u = ((raw >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53
    return ndtri(u)


@dataclass(frozen=True)
class _Job:
    row_masks: tuple[int, ...]
    n: int
    rays: np.ndarray | None
    codewords: np.ndarray
    sigma: float
    key: np.ndarray
    start: int
    stop: int
    screen: bool


def _run_batch(job: _Job) -> tuple[int, int, int]:
    """Return ``(trials, lp errors, ml errors)`` for one batch."""
    H = BinaryMatrix.from_row_masks(list(job.row_masks), job.n)
    constraints = polytope_constraints(H)
    y = 1.0 + job.sigma * trial_noise(job.key, job.n, job.start, job.stop)
    llr = 2.0 * y / job.sigma**2
    costs = np.rint(llr * (1 << LLR_SCALE_BITS)).astype(np.int64)

    ml_err = (costs @ job.codewords[1:].T).min(axis=1) < 0 if len(job.codewords) > 1 else np.zeros(len(costs), bool)
    if job.screen:
        if job.rays is not None:
            margin = (costs @ job.rays.T).min(axis=1)
        else:
            margin = costs.min(axis=1)
        doubtful = np.flatnonzero(margin <= 0)
    else:
        margin = None
        doubtful = np.arange(len(costs))

    lp_err = 0
    for t in doubtful:
        res = lp_decode(H, [int(c) for c in costs[t]], constraints=constraints)
        if not res.success:
            lp_err += 1
        elif margin is not None and job.rays is not None and margin[t] < 0:
            raise AssertionError("edge screen and simplex disagree")
        if ml_err[t] and res.success:
            raise AssertionError("LP decoded correctly where ML failed")
    return job.stop - job.start, lp_err, int(ml_err.sum())


def simulate(
    H: BinaryMatrix,
    snr_db_list: Iterable[float],
    trials: int,
    seed: int,
    min_ml_errors: int | None = None,
    batch: int = DEFAULT_BATCH,
    screen: bool = True,
    threads: int = 1,
    ray_cap: int = DEFAULT_RAY_CAP,
    codeword_cap: int = DEFAULT_CODEWORD_CAP,
) -> list[SimulationPoint]:
    """Word-error rates of LP and ML decoding at each SNR (``E_b/N_0`` in dB).

    Without ``min_ml_errors`` exactly ``trials`` trials run per point. With
    it, batches run until at least that many ML errors were seen or
    ``trials`` is reached, whichever comes first. The stopping batch does
    not depend on ``threads``.

    ``screen=False`` runs the exact simplex on every trial.
    """
    n = H.cols
    k = dimension(H)
    if k == 0:
        raise ValueError("the code has a single codeword; rate is zero")
    if batch < 1 or trials < 1:
        raise ValueError("trials and batch must be positive")
    codewords = codeword_matrix(H, codeword_cap).astype(np.int64)
    rays = None
    if screen:
        try:
            rays = np.array([r.representative for r in enumerate_rays(H, ray_cap).rays], dtype=np.int64)
        except DimensionTooLarge:
            rays = None
    rate = k / n
    out = []
    pool = ProcessPoolExecutor(threads) if threads > 1 else None
    try:
        for idx, snr in enumerate(snr_db_list):
            sigma = snr_to_sigma(float(snr), rate)
            key = stream_key(seed, idx)
            starts = list(range(0, trials, batch))
            jobs = [
                _Job(tuple(H.row_masks), n, rays, codewords, sigma, key, s, min(s + batch, trials), screen)
                for s in starts
            ]
            done = [0, 0, 0]
            step = threads if pool else 1
            for lo in range(0, len(jobs), step):
                chunk = jobs[lo : lo + step]
                results = list(pool.map(_run_batch, chunk)) if pool else [_run_batch(chunk[0])]
                stop = False
                for res in results:
                    done = [a + b for a, b in zip(done, res)]
                    if min_ml_errors is not None and done[2] >= min_ml_errors:
                        stop = True
                        break
                if stop:
                    break
            out.append(SimulationPoint(float(snr), *done))
    finally:
        if pool:
            pool.shutdown()
    return out


def binomial_sigma(p: float, trials: int) -> float:
    return math.sqrt(max(p * (1 - p), 0.0) / trials) if trials else float("nan")


def _fmt(x: float) -> str:
    return "nan" if math.isnan(x) else repr(float(x))


def to_csv(points: Sequence[SimulationPoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for p in points:
        w.writerow([_fmt(p.snr_db), p.trials, p.errors_lp, p.errors_ml, _fmt(p.wer_lp), _fmt(p.wer_ml), _fmt(p.ratio)])
    return buf.getvalue()
