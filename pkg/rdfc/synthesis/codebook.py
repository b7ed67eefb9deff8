"""Random codebooks and the likelihood encoder."""
import logging
from typing import Sequence, Union

import numpy as np

from ..common.errors import CapacityError
from .models import CoordinationScheme

logger = logging.getLogger(__name__)

CODEBOOK_CAP = 2**24

Seed = Union[int, Sequence[int]]


def build_codebook(scheme: CoordinationScheme, n: int, M: int, M0: int, seed: Seed) -> np.ndarray:
    """Draw M0 bins of M codewords u^n i.i.d. from P_U.

    Returns:
        np.ndarray: Integer array of shape (M0, M, n).

    Raises:
        CapacityError: If M0 * M * n exceeds the codebook cap.
    """
    if min(n, M, M0) < 1:
        raise ValueError(f"n, M and M0 must be positive, got {(n, M, M0)}")
    if M0 * M * n > CODEBOOK_CAP:
        raise CapacityError(f"codebook of {M0} x {M} x {n} symbols exceeds the cap of {CODEBOOK_CAP}")
    rng = np.random.default_rng(seed)
    return rng.choice(scheme.u_size, size=(M0, M, n), p=scheme.pu)


def likelihood_encoder_distribution(
    x_seq: Sequence[int], bin_codewords: np.ndarray, scheme: CoordinationScheme
) -> np.ndarray:
    """P(j | x~^n) proportional to prod_i P(x~_i | u_{j,i}) over one bin.

    Falls back to a uniform index when every codeword has zero likelihood.
    """
    bin_codewords = np.atleast_2d(bin_codewords)
    if bin_codewords.shape[0] == 0:
        raise ValueError("bin must contain at least one codeword")
    x_seq = np.asarray(x_seq)
    likelihood = scheme.px_u[bin_codewords, x_seq[None, :]].prod(axis=1)
    total = likelihood.sum()
    if total == 0:
        logger.warning("source sequence %s has zero likelihood in this bin; using a uniform index", x_seq.tolist())
        return np.full(bin_codewords.shape[0], 1.0 / bin_codewords.shape[0])
    return likelihood / total
