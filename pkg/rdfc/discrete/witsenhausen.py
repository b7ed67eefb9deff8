"""Witsenhausen's f-function and the resulting lower bound on C(X~;Y).

For a k x k joint matrix with maxitrace x,

    C(X~;Y) >= H(X~,Y) - f(x),

where f equals f1 on [x_k*, 1] and the chord f2 on [1/k, x_k*].
"""
import logging
import math
from typing import Tuple

from scipy.special import xlogy

from ..common.errors import DomainError
from .entropy import joint_entropy
from .maxtrace import Mode, maxtrace
from .models import JointPmf, WitsenhausenResult

logger = logging.getLogger(__name__)

_ENDPOINT_TOL = 1e-12


def crossover_point(k: int) -> float:
    """x_k* = (k^2 - 3k + 3) / (k (k - 1)), where f1 and f2 meet."""
    return (k * k - 3 * k + 3) / (k * (k - 1))


def _f1(k: int, x: float) -> float:
    alpha = min(math.sqrt(max((k * x - 1.0) / (k - 1.0), 0.0)), 1.0)
    a = 1.0 + (k - 1) * alpha
    b = 1.0 - alpha
    return -2.0 / k * (float(xlogy(a, a)) + (k - 1) * float(xlogy(b, b))) + 2.0 * math.log(k)


def _f2(k: int, x: float) -> float:
    return 2.0 * math.log(k) - 2.0 * (k - 1) * math.log(k - 1) / (k - 2) * (x - 1.0 / k)


def witsenhausen_f(k: int, x: float) -> Tuple[float, str]:
    """Evaluate f(x) for alphabet size k.

    Args:
        k: Alphabet size, >= 3.
        x: Maxitrace value in [1/k, 1] (1e-12 slack at both ends).

    Returns:
        Tuple[float, str]: f(x) in nats and the branch used ("f1" or "f2").

    Raises:
        DomainError: If k < 3 or x lies outside [1/k, 1].
    """
    if k < 3:
        raise DomainError(f"f is defined for k >= 3, got k={k}")
    if not (1.0 / k - _ENDPOINT_TOL <= x <= 1.0 + _ENDPOINT_TOL):
        raise DomainError(f"x must lie in [1/{k}, 1], got {x}")
    x = min(max(x, 1.0 / k), 1.0)
    if x >= crossover_point(k):
        return _f1(k, x), "f1"
    return _f2(k, x), "f2"


def wci_lower_bound_discrete(Q: JointPmf, mode: Mode = "auto") -> WitsenhausenResult:
    """Lower bound H(X~,Y) - f(maxtr(Q)) on Wyner's common information.

    The bound is clamped at zero since C(X~;Y) >= 0; the unclamped value is
    kept in ``wci_raw``.
    """
    if Q.k < 3:
        raise DomainError(f"the bound needs k >= 3, got k={Q.k}; pad with zero rows first")
    h_joint = joint_entropy(Q)
    maxtr, perm = maxtrace(Q, mode=mode)
    f_value, branch = witsenhausen_f(Q.k, maxtr)
    raw = h_joint - f_value
    logger.debug("witsenhausen: H=%.6g maxtr=%.6g f=%.6g (%s)", h_joint, maxtr, f_value, branch)
    return WitsenhausenResult(
        h_joint=h_joint,
        maxtr=maxtr,
        perm=perm,
        f_value=f_value,
        branch=branch,
        wci_lower=max(raw, 0.0),
        wci_raw=raw,
    )
