"""Exact (epsilon, delta)-LDP audit of a finite channel."""
import math

import numpy as np

from ..common.errors import DomainError
from .models import JointPmf


def channel(Q: JointPmf) -> np.ndarray:
    """Row-stochastic P_{Y|X~} derived from the joint pmf.

    Raises:
        DomainError: If some input symbol has zero probability.
    """
    p_x = Q.p_x
    if np.any(p_x <= 0):
        raise DomainError("every input symbol needs positive probability to define P(y|x)")
    return Q.q / p_x[:, None]


def ldp_audit(Q: JointPmf, epsilon: float) -> float:
    """Smallest delta for which P_{Y|X~} is (epsilon, delta)-LDP.

    For a pair (x, x') the worst output set is {y : P(y|x) > e^eps P(y|x')},
    so delta* = max over ordered pairs of sum_y (P(y|x) - e^eps P(y|x'))^+.
    """
    if epsilon < 0:
        raise DomainError(f"epsilon must be non-negative, got {epsilon}")
    w = channel(Q)
    gap = w[:, None, :] - math.exp(epsilon) * w[None, :, :]
    return float(np.clip(gap, 0.0, None).sum(axis=2).max())
