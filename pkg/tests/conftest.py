"""Shared test fixtures."""
import logging

import numpy as np
import pytest

from rdfc.discrete import BscMixtureParams
from rdfc.gaussian import GaussianLdpConfig
from rdfc.synthesis import CoordinationScheme


@pytest.fixture(autouse=True)
def reset_rdfc_logger():
    """Undo CLI logging setup so caplog sees library records."""
    yield
    logger = logging.getLogger("rdfc")
    logger.handlers.clear()
    logger.setLevel(logging.NOTSET)
    logger.propagate = True


@pytest.fixture
def row1_config():
    """First Gaussian-LDP table row, C = 1."""
    return GaussianLdpConfig(sigma_x=0.4938, clip_c=1.0, epsilon=0.8918, delta=0.0097)


@pytest.fixture
def row8_config():
    return GaussianLdpConfig(sigma_x=0.3280, clip_c=1.0, epsilon=0.1266, delta=0.0032)


@pytest.fixture
def rr_row1():
    return BscMixtureParams(p1=0.05, p2=0.45, p3=0.5, p4=0.25, c=0.45, d=0.4)


@pytest.fixture
def rr_row8():
    return BscMixtureParams(p1=0.5, p2=0.0, p3=0.45, p4=0.3, c=0.4, d=0.45)


@pytest.fixture
def bsc_scheme():
    """Uniform U seen by both sides through BSC(0.25)."""
    return CoordinationScheme(
        p_u=[0.5, 0.5],
        p_x_given_u=[[0.75, 0.25], [0.25, 0.75]],
        p_y_given_u=[[0.75, 0.25], [0.25, 0.75]],
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
