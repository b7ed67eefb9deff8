"""Tests for the exact induced joint law."""
import itertools

import numpy as np
import pytest

from rdfc.common.errors import CapacityError, DomainError
from rdfc.synthesis import (
    CoordinationScheme,
    build_codebook,
    iid_marginal,
    induced_joint_exact,
    likelihood_encoder_distribution,
    product_target,
    sequences,
    single_letter_marginal,
    tv_distance,
)


@pytest.fixture
def ternary_scheme():
    return CoordinationScheme(
        p_u=[0.2, 0.5, 0.3],
        p_x_given_u=[[0.6, 0.4], [0.1, 0.9], [0.5, 0.5]],
        p_y_given_u=[[0.2, 0.3, 0.5], [0.7, 0.2, 0.1], [0.3, 0.3, 0.4]],
    )


def _brute_force(codebook, scheme, n):
    xs = list(itertools.product(range(scheme.x_size), repeat=n))
    ys = list(itertools.product(range(scheme.y_size), repeat=n))
    P = np.zeros((len(xs), len(ys)))
    for a, x in enumerate(xs):
        p_x = np.prod([scheme.p_x[s] for s in x])
        for bin_codewords in codebook:
            enc = likelihood_encoder_distribution(x, bin_codewords, scheme)
            for j, u in enumerate(bin_codewords):
                for b, y in enumerate(ys):
                    P[a, b] += p_x * enc[j] * np.prod([scheme.py_u[u[i], y[i]] for i in range(n)])
    return P / codebook.shape[0]


def test_sequences_are_lexicographic():
    np.testing.assert_array_equal(sequences(2, 2), [[0, 0], [0, 1], [1, 0], [1, 1]])
    assert sequences(3, 4).shape == (81, 4)


def test_product_target_indexing():
    Q = np.array([[0.1, 0.2, 0.3], [0.15, 0.05, 0.2]])
    P = product_target(Q, 2)
    assert P.shape == (4, 9)
    assert P[1 * 2 + 0, 2 * 3 + 1] == pytest.approx(Q[1, 2] * Q[0, 1])
    np.testing.assert_allclose(single_letter_marginal(product_target(Q, 3), 3, 2, 3), Q)


def test_iid_marginal():
    p = np.array([0.3, 0.7])
    np.testing.assert_allclose(iid_marginal(p, 2), [0.09, 0.21, 0.21, 0.49])


def test_induced_joint_matches_brute_force(ternary_scheme):
    """Test the vectorised law against a loop over bins, codewords and sequences."""
    n = 2
    codebook = build_codebook(ternary_scheme, n, M=3, M0=2, seed=[4, 0])
    np.testing.assert_allclose(
        induced_joint_exact(codebook, ternary_scheme, n), _brute_force(codebook, ternary_scheme, n), atol=1e-14
    )


def test_induced_joint_keeps_source_marginal(bsc_scheme):
    n = 4
    P = induced_joint_exact(build_codebook(bsc_scheme, n, 5, 2, seed=[1, 0]), bsc_scheme, n)
    assert P.sum() == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(P.sum(axis=1), iid_marginal(bsc_scheme.p_x, n), atol=1e-14)


def test_induced_joint_falls_back_for_dead_sequences(caplog):
    scheme = CoordinationScheme(
        p_u=[0.5, 0.5], p_x_given_u=[[1.0, 0.0], [0.0, 1.0]], p_y_given_u=[[0.9, 0.1], [0.1, 0.9]]
    )
    P = induced_joint_exact(np.zeros((1, 2, 1), dtype=int), scheme, 1)
    assert P.sum() == pytest.approx(1.0)
    np.testing.assert_allclose(P[1], 0.5 * np.array([0.9, 0.1]))
    assert "fell back to uniform" in caplog.text


def test_induced_joint_caps(bsc_scheme):
    with pytest.raises(CapacityError):
        induced_joint_exact(np.zeros((1, 1, 11), dtype=int), bsc_scheme, 11)
    with pytest.raises(DomainError):
        induced_joint_exact(np.zeros((1, 1, 3), dtype=int), bsc_scheme, 2)


def test_tv_distance():
    assert tv_distance([0.5, 0.5], [1.0, 0.0]) == pytest.approx(0.5)
    assert tv_distance([0.2, 0.8], [0.2, 0.8]) == 0.0
    with pytest.raises(DomainError):
        tv_distance([1.0], [0.5, 0.5])
