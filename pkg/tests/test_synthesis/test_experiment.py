"""Tests for the exact synthesis experiment."""
import csv
from unittest.mock import patch

import numpy as np
import pytest

from rdfc.common.errors import CapacityError
from rdfc.synthesis import (
    SynthesisConfig,
    build_codebook,
    check_encoder_size,
    induced_joint_exact,
    product_target,
    synthesis_experiment,
    tv_distance,
)
from rdfc.synthesis.induced import WORK_CAP


def _run(scheme, n, rate_R, rate_R0, trials=20):
    return synthesis_experiment(
        SynthesisConfig(scheme=scheme, n=n, rate_R=rate_R, rate_R0=rate_R0, trials=trials, seed=0)
    )


def test_outcome_invariants(bsc_scheme):
    outcome = _run(bsc_scheme, 3, 0.6, 0.3, trials=5)
    assert outcome.codebook_sizes == (7, 3)
    assert len(outcome.tv_per_trial) == 5
    assert all(0 <= t <= 1 for t in outcome.tv_per_trial)
    assert all(s <= t + 1e-12 for s, t in zip(outcome.single_letter_tv, outcome.tv_per_trial))
    assert outcome.marginal_error < 1e-12


def test_outcome_is_reproducible(bsc_scheme):
    assert _run(bsc_scheme, 3, 0.6, 0.3, trials=4) == _run(bsc_scheme, 3, 0.6, 0.3, trials=4)


@pytest.mark.slow
def test_tv_shrinks_inside_region(bsc_scheme):
    """Test that the median TV falls at every step of n when (R, R0) lies deep inside the region."""
    outcomes = [_run(bsc_scheme, n, 0.6, 0.3) for n in (2, 4, 6, 8)]
    medians = [o.median_tv for o in outcomes]
    assert all(a > b for a, b in zip(medians, medians[1:])), medians
    assert all(o.marginal_error < 1e-12 for o in outcomes)


@pytest.mark.slow
def test_tv_stays_away_from_zero_without_rate(bsc_scheme):
    """Test that a single fixed codeword cannot synthesise the channel at any n."""
    for n in range(1, 9):
        outcome = _run(bsc_scheme, n, 0.0, 0.0)
        assert outcome.codebook_sizes == (1, 1)
        assert outcome.median_tv >= 0.05, n


@pytest.mark.slow
def test_more_codewords_never_raise_median_tv(bsc_scheme):
    n = 4
    target_n = product_target(bsc_scheme.target(), n)
    medians = []
    for M in (2, 4, 8, 16, 32):
        tvs = [
            tv_distance(induced_joint_exact(build_codebook(bsc_scheme, n, M, 1, seed=[0, t]), bsc_scheme, n), target_n)
            for t in range(10)
        ]
        medians.append(float(np.median(tvs)))
    assert all(a >= b for a, b in zip(medians, medians[1:])), medians


def test_save_csv(bsc_scheme, tmp_path):
    outcome = _run(bsc_scheme, 2, 0.6, 0.3, trials=3)
    path = tmp_path / "synth.csv"
    outcome.save_csv(path)
    with open(path, newline="") as f:
        rows = list(csv.DictReader(f))
    assert [r["trial"] for r in rows] == ["0", "1", "2"]
    assert float(rows[0]["tv"]) == pytest.approx(outcome.tv_per_trial[0], rel=1e-9)
    assert rows[0]["R"] == "0.6"


def test_joint_cap_is_checked_first(bsc_scheme):
    with pytest.raises(CapacityError):
        _run(bsc_scheme, 11, 0.6, 0.3, trials=1)


def test_likelihood_matrix_cap_is_checked_before_allocation(bsc_scheme):
    """Test that n=10 at R=1.2 (M=162755 codewords over 1024 sequences) is refused."""
    cfg = SynthesisConfig(scheme=bsc_scheme, n=10, rate_R=1.2, rate_R0=0.0, trials=1)
    assert cfg.codebook_sizes == (162755, 1)
    with patch("rdfc.synthesis.experiment.build_codebook") as build:
        with pytest.raises(CapacityError, match="likelihood matrix"):
            synthesis_experiment(cfg)
    build.assert_not_called()


def test_check_encoder_size_bounds(bsc_scheme):
    scheme = bsc_scheme
    check_encoder_size(scheme, 4, WORK_CAP // 16)
    with pytest.raises(CapacityError):
        check_encoder_size(scheme, 4, WORK_CAP // 16 + 1)
