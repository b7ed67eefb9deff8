"""Tests for the Sibson alpha-mutual information."""
import math

import numpy as np
import pytest

from rdfc.common.errors import DomainError
from rdfc.discrete import JointPmf, mutual_information_discrete
from rdfc.blocklength import alpha_mi_discrete, alpha_mi_gaussian
from rdfc.gaussian import GaussianLdpConfig, build_joint, mutual_information


@pytest.fixture
def doubly_symmetric():
    return JointPmf(np.array([[0.4, 0.1], [0.1, 0.4]]))


def _random_pmf(rng, k, zeros=0):
    q = rng.random((k, k))
    q.flat[rng.choice(k * k, size=zeros, replace=False)] = 0.0
    return JointPmf(q / q.sum())


def test_order_two_closed_form(doubly_symmetric):
    """Test I_2 = 2 ln(2 sqrt(0.34)) for the doubly symmetric pair."""
    expected = 2 * math.log(2 * math.sqrt(0.34))
    assert alpha_mi_discrete(doubly_symmetric, 2.0) == pytest.approx(expected, rel=1e-12)


def test_nested_and_longhand_agree(rng):
    for k, zeros in ((2, 0), (3, 2), (4, 0), (4, 5), (6, 10)):
        Q = _random_pmf(rng, k, zeros)
        for alpha in (1.01, 1.5, 2.0, 4.0):
            assert alpha_mi_discrete(Q, alpha, method="nested") == pytest.approx(
                alpha_mi_discrete(Q, alpha, method="longhand"), rel=1e-10, abs=1e-14
            )


def test_limit_at_one_is_mutual_information(doubly_symmetric):
    assert alpha_mi_discrete(doubly_symmetric, 1 + 1e-7) == pytest.approx(
        mutual_information_discrete(doubly_symmetric), abs=1e-6
    )


def test_order_properties_on_random_joints(rng):
    """Test monotonicity in alpha and I_1.001 ~ I on twenty random joints."""
    for index in range(20):
        k = int(rng.integers(2, 6))
        Q = _random_pmf(rng, k, zeros=index % k)
        values = [alpha_mi_discrete(Q, a) for a in np.linspace(1.001, 3.0, 25)]
        assert np.all(np.diff(values) >= -1e-14)
        assert abs(values[0] - mutual_information_discrete(Q)) <= 1e-3


def test_independent_pair_is_zero():
    Q = JointPmf(np.outer([0.3, 0.7], [0.5, 0.5]))
    assert alpha_mi_discrete(Q, 2.0) == pytest.approx(0.0, abs=1e-14)


@pytest.mark.parametrize("alpha", [1.0, 0.5, -2.0])
def test_order_must_exceed_one(doubly_symmetric, alpha):
    with pytest.raises(DomainError):
        alpha_mi_discrete(doubly_symmetric, alpha)


@pytest.fixture
def nearly_unclipped():
    """C = 6 sigma_x, so the clipped input is Gaussian to about 1e-9."""
    return build_joint(GaussianLdpConfig(sigma_x=1 / 6, clip_c=1.0, epsilon=1.0, delta=0.9))


@pytest.mark.parametrize("alpha", [1.5, 2.0])
def test_gaussian_matches_jointly_gaussian_closed_form(nearly_unclipped, alpha):
    """Test I_a = 0.5 ln(1 + a snr) when clipping is negligible."""
    j = nearly_unclipped
    snr = j.trunc.var_trunc / j.sigma_z_sq
    assert alpha_mi_gaussian(j, alpha) == pytest.approx(0.5 * math.log1p(alpha * snr), rel=2e-4)


def test_gaussian_sits_above_mutual_information(row1_config):
    j = build_joint(row1_config)
    mi = mutual_information(j)
    low, high = alpha_mi_gaussian(j, 1.25), alpha_mi_gaussian(j, 2.0)
    assert mi - 1e-6 <= low <= high


def test_gaussian_order_must_exceed_one(row1_config):
    with pytest.raises(DomainError):
        alpha_mi_gaussian(build_joint(row1_config), 1.0)
