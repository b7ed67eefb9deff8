"""Exact joint law of (X~^n, Y^n) induced by a codebook and the likelihood encoder.

Sequences are enumerated lexicographically with the first symbol most
significant, matching ``itertools.product(range(size), repeat=n)``.
"""
import itertools
import logging

import numpy as np

from ..common.errors import CapacityError, DomainError
from .models import CoordinationScheme

logger = logging.getLogger(__name__)

JOINT_CAP = 2**20
# entries of one M x |X~|^n (or M x |Y|^n) likelihood matrix
WORK_CAP = 2**24


def sequences(size: int, n: int) -> np.ndarray:
    """All length-n sequences over range(size), shape (size**n, n)."""
    return np.array(list(itertools.product(range(size), repeat=n)), dtype=int).reshape(-1, n)


def _likelihoods(channel: np.ndarray, codewords: np.ndarray, seqs: np.ndarray) -> np.ndarray:
    """L[j, s] = prod_i channel[u_{j,i}, s_i]."""
    out = np.ones((codewords.shape[0], seqs.shape[0]))
    for i in range(codewords.shape[1]):
        out *= channel[codewords[:, i]][:, seqs[:, i]]
    return out


def product_target(Q: np.ndarray, n: int) -> np.ndarray:
    """The i.i.d. law Q^n over (x~^n, y^n) as a (|X~|^n, |Y|^n) matrix."""
    Q = np.asarray(Q, dtype=float)
    out = Q
    for _ in range(n - 1):
        out = np.einsum("ab,cd->acbd", out, Q).reshape(out.shape[0] * Q.shape[0], out.shape[1] * Q.shape[1])
    return out


def iid_marginal(p: np.ndarray, n: int) -> np.ndarray:
    """P^n over length-n sequences."""
    out = np.asarray(p, dtype=float)
    for _ in range(n - 1):
        out = np.outer(out, p).ravel()
    return out


def single_letter_marginal(P: np.ndarray, n: int, x_size: int, y_size: int) -> np.ndarray:
    """Marginal law of (x~_1, y_1) from a sequence-level joint."""
    return P.reshape(x_size, x_size ** (n - 1), y_size, y_size ** (n - 1)).sum(axis=(1, 3))


def tv_distance(P: np.ndarray, Q: np.ndarray) -> float:
    """Total variation distance 1/2 sum |P - Q|, in [0, 1]."""
    P = np.asarray(P, dtype=float)
    Q = np.asarray(Q, dtype=float)
    if P.shape != Q.shape:
        raise DomainError(f"distributions live on different sets: {P.shape} vs {Q.shape}")
    return float(min(max(0.5 * np.abs(P - Q).sum(), 0.0), 1.0))


def check_joint_size(scheme: CoordinationScheme, n: int) -> None:
    """Raise CapacityError when |X~|^n |Y|^n exceeds the enumeration cap."""
    size = scheme.x_size**n * scheme.y_size**n
    if size > JOINT_CAP:
        raise CapacityError(f"|X|^n |Y|^n = {size} exceeds the cap of {JOINT_CAP}")


def check_encoder_size(scheme: CoordinationScheme, n: int, M: int) -> None:
    """Raise CapacityError when the per-bin likelihood matrices exceed the working cap."""
    size = M * max(scheme.x_size**n, scheme.y_size**n)
    if size > WORK_CAP:
        raise CapacityError(f"likelihood matrix of {M} codewords x {size // M} sequences exceeds the cap of {WORK_CAP}")


def induced_joint_exact(codebook: np.ndarray, scheme: CoordinationScheme, n: int) -> np.ndarray:
    """P(x~^n, y^n) = P_X~^n(x~^n) (1/M0) sum_c sum_j PL(j | x~^n, c) prod_i P(y_i | u_{c,j,i}).

    Common randomness is averaged exactly over the M0 bins.

    Raises:
        CapacityError: If |X~|^n |Y|^n exceeds the enumeration cap or a
            likelihood matrix exceeds the working cap.
    """
    check_joint_size(scheme, n)
    x_size, y_size = scheme.x_size, scheme.y_size
    if codebook.ndim != 3 or codebook.shape[2] != n:
        raise DomainError(f"codebook must have shape (M0, M, {n}), got {codebook.shape}")
    check_encoder_size(scheme, n, codebook.shape[1])

    xs, ys = sequences(x_size, n), sequences(y_size, n)
    M0, M = codebook.shape[:2]
    mixed = np.zeros((xs.shape[0], ys.shape[0]))
    fallbacks = 0
    for bin_codewords in codebook:
        x_lik = _likelihoods(scheme.px_u, bin_codewords, xs).T
        totals = x_lik.sum(axis=1, keepdims=True)
        dead = totals[:, 0] == 0
        fallbacks += int(dead.sum())
        encoder = np.divide(x_lik, totals, out=np.full_like(x_lik, 1.0 / M), where=~dead[:, None])
        mixed += encoder @ _likelihoods(scheme.py_u, bin_codewords, ys)
    if fallbacks:
        logger.warning("%d (sequence, bin) pairs had zero likelihood; encoder fell back to uniform", fallbacks)
    return iid_marginal(scheme.p_x, n)[:, None] * mixed / M0
