"""Tests for the f-function and the discrete WCI bound."""
import math

import numpy as np
import pytest

from rdfc.common.errors import DomainError
from rdfc.discrete import JointPmf, crossover_point, wci_lower_bound_discrete, witsenhausen_f
from rdfc.discrete import witsenhausen


def test_crossover_point_values():
    assert crossover_point(3) == pytest.approx(0.5)
    assert crossover_point(4) == pytest.approx(7 / 12)


def test_branches_meet_at_crossover():
    """Test f1 and f2 agree at x_4* = 7/12."""
    x = 7 / 12
    assert witsenhausen._f1(4, x) == pytest.approx(1.673977, abs=1e-6)
    assert witsenhausen._f2(4, x) == pytest.approx(1.673977, abs=1e-6)
    for k in range(3, 11):
        xk = crossover_point(k)
        assert abs(witsenhausen._f1(k, xk) - witsenhausen._f2(k, xk)) <= 1e-9


def test_endpoint_values():
    for k in range(3, 11):
        assert witsenhausen_f(k, 1.0) == (pytest.approx(0.0, abs=1e-12), "f1")
        assert witsenhausen_f(k, 1.0 / k) == (pytest.approx(2 * math.log(k), abs=1e-12), "f2")


def test_f_is_decreasing():
    xs = np.linspace(0.25, 1.0, 301)
    values = [witsenhausen_f(4, x)[0] for x in xs]
    assert np.all(np.diff(values) < 0)


def test_endpoint_slack_is_accepted():
    assert witsenhausen_f(4, 1.0 + 5e-13)[0] == pytest.approx(0.0, abs=1e-12)
    assert witsenhausen_f(4, 0.25 - 5e-13)[1] == "f2"


@pytest.mark.parametrize("k, x", [(2, 0.7), (4, 0.2), (4, 1.01)])
def test_f_domain(k, x):
    with pytest.raises(DomainError):
        witsenhausen_f(k, x)


def test_diagonal_pmf_bound_equals_entropy():
    """Test that a diagonal Q (X~ = Y) gives C = H."""
    Q = JointPmf(np.diag([0.1, 0.2, 0.3, 0.4]))
    result = wci_lower_bound_discrete(Q)
    assert result.maxtr == pytest.approx(1.0)
    assert result.wci_lower == pytest.approx(result.h_joint, abs=1e-12)


def test_uniform_pmf_bound_is_zero():
    result = wci_lower_bound_discrete(JointPmf(np.full((3, 3), 1 / 9)))
    assert result.branch == "f2"
    assert result.wci_raw == pytest.approx(0.0, abs=1e-12)
    assert result.wci_lower >= 0


def test_negative_bound_is_clamped():
    p = np.array([0.7, 0.1, 0.1, 0.1])
    q = np.outer(p, p)
    result = wci_lower_bound_discrete(JointPmf(q))
    assert result.wci_raw < 0
    assert result.wci_lower == 0.0


def test_binary_pmf_needs_padding():
    with pytest.raises(DomainError):
        wci_lower_bound_discrete(JointPmf(np.array([[0.4, 0.1], [0.1, 0.4]])))
