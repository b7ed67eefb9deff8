"""Tests for the standard normal helpers."""
import numpy as np
import pytest

from rdfc.common.errors import DomainError
from rdfc.stats import erf, gamma_ratio, std_normal_cdf, std_normal_pdf


def test_std_normal_pdf_values():
    assert std_normal_pdf(0.0) == pytest.approx(0.3989422804, abs=1e-10)
    assert std_normal_pdf(1.0) == pytest.approx(0.2419707245, abs=1e-10)
    assert std_normal_pdf(-1.0) == std_normal_pdf(1.0)


def test_std_normal_cdf_values():
    assert std_normal_cdf(0.0) == 0.5
    assert abs(std_normal_cdf(10.0) - 1.0) <= 1e-15
    assert std_normal_cdf(1.0) == pytest.approx(0.8413447461, abs=1e-10)
    assert std_normal_cdf(-8.0) == pytest.approx(6.22096e-16, rel=1e-5)


def test_erf_values_and_symmetry():
    assert erf(0.0) == 0.0
    assert erf(0.70711) == pytest.approx(0.68269, abs=1e-4)
    a = np.linspace(0.1, 4.0, 17)
    np.testing.assert_allclose(erf(-a), -erf(a), rtol=0, atol=0)


def test_vectorised_input_keeps_shape():
    a = np.linspace(-3, 3, 12).reshape(3, 4)
    assert std_normal_pdf(a).shape == (3, 4)
    assert isinstance(std_normal_cdf(0.3), float)


def test_gamma_ratio_values():
    assert gamma_ratio(1.0) == pytest.approx(0.35444, abs=1e-4)
    assert gamma_ratio(5.0) == pytest.approx(7.43e-6, abs=1e-7)
    assert gamma_ratio(0.001) == pytest.approx(0.5, abs=1e-4)


def test_gamma_ratio_is_bounded_and_decreasing():
    a = np.linspace(0.01, 8.0, 2000)
    g = gamma_ratio(a)
    assert np.all(g > 0) and np.all(g < 0.5)
    assert np.all(np.diff(g) < 0)


@pytest.mark.parametrize("bad", [0.0, -1.0])
def test_gamma_ratio_rejects_non_positive(bad):
    with pytest.raises(DomainError):
        gamma_ratio(bad)
