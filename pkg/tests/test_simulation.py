import csv
import io
import math

import numpy as np
import pytest

from pseudocone import BinaryMatrix, simulate, to_csv
from pseudocone.simulation import CSV_COLUMNS, stream_key, trial_noise


def test_noise_streams_are_counter_based():
    key = stream_key(3, 1)
    whole = trial_noise(key, 7, 0, 50)
    assert np.array_equal(whole[20:35], trial_noise(key, 7, 20, 35))
    assert not np.array_equal(trial_noise(stream_key(3, 2), 7, 0, 5), whole[:5])
    assert abs(whole.mean()) < 0.3 and 0.7 < whole.std() < 1.3


def test_reproducible_and_batch_independent(ex1):
    a = simulate(ex1, [2.0, 4.0], 3000, seed=11, batch=3000)
    b = simulate(ex1, [2.0, 4.0], 3000, seed=11, batch=700)
    assert a == b
    assert to_csv(a) == to_csv(b)


def test_threads_do_not_change_results(ex1):
    serial = simulate(ex1, [3.0], 4000, seed=5, batch=500, min_ml_errors=40)
    pooled = simulate(ex1, [3.0], 4000, seed=5, batch=500, min_ml_errors=40, threads=3)
    assert serial == pooled


def test_screen_agrees_with_full_simplex(ex1, hamming):
    for H in (ex1, hamming):
        fast = simulate(H, [1.0], 400, seed=2)
        slow = simulate(H, [1.0], 400, seed=2, screen=False)
        assert fast == slow


def test_lp_never_beats_ml(ex1):
    for p in simulate(ex1, [0.0, 2.0], 5000, seed=8):
        assert p.errors_lp >= p.errors_ml > 0
        assert p.ratio >= 1.0


def test_very_noisy_channel(ex1):
    (p,) = simulate(ex1, [-40.0], 2000, seed=1)
    # almost no information survives: ML picks the zero word about 1/8 of the time
    assert p.wer_ml == pytest.approx(1 - 2**-3, abs=0.05)
    assert p.wer_lp >= p.wer_ml


def test_adaptive_stop(ex1):
    (p,) = simulate(ex1, [3.0], 10**6, seed=4, min_ml_errors=50, batch=1000)
    assert p.errors_ml >= 50
    assert p.trials % 1000 == 0 and p.trials < 10**6


def test_csv_layout(ex1):
    text = to_csv(simulate(ex1, [3.0], 500, seed=1))
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[1][0] == "3.0" and rows[1][1] == "500"


def test_ratio_without_ml_errors_is_nan():
    H = BinaryMatrix([[1, 1, 0], [0, 1, 1]])
    (p,) = simulate(H, [30.0], 50, seed=1)
    assert p.errors_ml == 0 and math.isnan(p.ratio)
