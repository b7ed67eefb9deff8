"""Tests for coordination schemes and rate-region membership."""
import math

import numpy as np
import pytest
from pydantic import ValidationError

from rdfc.discrete import binary_entropy
from rdfc.synthesis import (
    CoordinationScheme,
    mutual_information_2d,
    rate_region_check,
    scheme_informations,
    target_mutual_information,
)


def test_bsc_scheme_informations(bsc_scheme):
    """Test I(X~;U) = ln 2 - H_b(1/4) and I(X~,Y;U) for the symmetric scheme."""
    i_xu, i_xyu = scheme_informations(bsc_scheme)
    assert i_xu == pytest.approx(math.log(2) - binary_entropy(0.25), abs=1e-12)
    assert i_xu == pytest.approx(0.1308, abs=1e-4)
    assert i_xyu == pytest.approx(math.log(2) + binary_entropy(0.375) - 2 * binary_entropy(0.25), abs=1e-12)
    assert i_xyu == pytest.approx(0.2301, abs=1e-4)


def test_target_of_bsc_scheme(bsc_scheme):
    np.testing.assert_allclose(bsc_scheme.target(), [[0.3125, 0.1875], [0.1875, 0.3125]])
    np.testing.assert_allclose(bsc_scheme.p_x, [0.5, 0.5])
    assert target_mutual_information(bsc_scheme) <= scheme_informations(bsc_scheme)[0]


def test_region_membership(bsc_scheme):
    inside = rate_region_check(bsc_scheme, 0.6, 0.3)
    assert inside.ok_R and inside.ok_sum
    outside = rate_region_check(bsc_scheme, 0.0, 0.0)
    assert not outside.ok_R and not outside.ok_sum
    split = rate_region_check(bsc_scheme, 0.15, 0.0)
    assert split.ok_R and not split.ok_sum


def test_mutual_information_2d_of_product():
    assert mutual_information_2d(np.outer([0.2, 0.8], [0.5, 0.3, 0.2])) == pytest.approx(0.0, abs=1e-15)


def test_scheme_sizes(bsc_scheme):
    assert (bsc_scheme.u_size, bsc_scheme.x_size, bsc_scheme.y_size) == (2, 2, 2)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"p_u": [0.6, 0.6], "p_x_given_u": [[1, 0], [0, 1]], "p_y_given_u": [[1, 0], [0, 1]]},
        {"p_u": [0.5, 0.5], "p_x_given_u": [[1, 0]], "p_y_given_u": [[1, 0], [0, 1]]},
        {"p_u": [0.5, 0.5], "p_x_given_u": [[1.2, -0.2], [0, 1]], "p_y_given_u": [[1, 0], [0, 1]]},
        {"p_u": [0.5, 0.5], "p_x_given_u": [[1, 0], [0, 0.5, 0.5]], "p_y_given_u": [[1, 0], [0, 1]]},
        {"p_u": [], "p_x_given_u": [], "p_y_given_u": []},
    ],
)
def test_invalid_schemes(kwargs):
    with pytest.raises(ValidationError):
        CoordinationScheme(**kwargs)
