"""Entropies and mutual information of a joint pmf, in nats."""
from typing import Tuple

import numpy as np
from scipy import special

from .models import JointPmf


def _entropy(p: np.ndarray) -> float:
    return float(special.entr(p).sum())


def binary_entropy(p: float) -> float:
    """H_b(p) in nats."""
    return _entropy(np.array([p, 1.0 - p]))


def joint_entropy(Q: JointPmf) -> float:
    """H(X~,Y) = -sum Q ln Q with 0 ln 0 = 0."""
    return _entropy(Q.q)


def marginal_entropies(Q: JointPmf) -> Tuple[float, float]:
    """(H(X~), H(Y))."""
    return _entropy(Q.p_x), _entropy(Q.p_y)


def mutual_information_discrete(Q: JointPmf) -> float:
    """I(X~;Y) = H(X~) + H(Y) - H(X~,Y), clamped at 0 against rounding."""
    h_x, h_y = marginal_entropies(Q)
    return max(h_x + h_y - joint_entropy(Q), 0.0)


def conditional_entropy(Q: JointPmf) -> float:
    """H(Y|X~), the common randomness that suffices for the I(X~;Y) corner point."""
    h_x, _ = marginal_entropies(Q)
    return joint_entropy(Q) - h_x
