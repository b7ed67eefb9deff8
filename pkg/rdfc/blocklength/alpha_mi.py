"""Sibson-type alpha-mutual information.

    I_a(X~;Y) = a/(a-1) ln E[ E^{1/a}[ exp(a i(X~;Y~)) | Y~ ] ],  (X~, Y~) ~ P_X~ x P_Y

which reduces to a/(a-1) ln sum_y ( sum_x P(x) P(y|x)^a )^{1/a}.
"""
import logging
import math
from typing import Literal, Optional

import numpy as np
from scipy import integrate, special

from ..common.errors import DivergenceError, DomainError
from ..discrete.models import JointPmf
from ..gaussian.models import GaussianJoint, QuadratureSpec
from ..stats import std_normal_pdf

logger = logging.getLogger(__name__)

INNER_TOL = 1e-8
OUTER_TOL = 1e-7

Method = Literal["nested", "longhand"]


def _check_alpha(alpha: float) -> None:
    if not alpha > 1:
        raise DomainError(f"alpha must exceed 1, got {alpha}")


def _nested(Q: JointPmf, alpha: float) -> float:
    q = Q.q
    p_x = Q.p_x
    rows = p_x > 0
    with np.errstate(divide="ignore"):
        log_p_x = np.log(p_x[rows])
        log_w = np.log(q[rows]) - log_p_x[:, None]
    inner = special.logsumexp(log_p_x[:, None] + alpha * log_w, axis=0)
    finite = np.isfinite(inner)
    return float(special.logsumexp(inner[finite] / alpha))


def _longhand(Q: JointPmf, alpha: float) -> float:
    p_x, p_y = Q.p_x, Q.p_y
    k = Q.k
    outer = 0.0
    for y in range(k):
        if p_y[y] == 0:
            continue
        inner = 0.0
        for x in range(k):
            if p_x[x] == 0 or Q.q[x, y] == 0:
                continue
            density = math.log(Q.q[x, y] / (p_x[x] * p_y[y]))
            inner += p_x[x] * math.exp(alpha * density)
        outer += p_y[y] * inner ** (1.0 / alpha)
    return math.log(outer)


def alpha_mi_discrete(Q: JointPmf, alpha: float, method: Method = "nested") -> float:
    """Exact alpha-mutual information of a finite joint, in nats.

    Args:
        Q: Joint pmf.
        alpha: Order, alpha > 1.
        method: "nested" evaluates the closed double sum in the log domain;
            "longhand" walks the two expectations over the information
            density term by term.
    """
    _check_alpha(alpha)
    log_sum = _longhand(Q, alpha) if method == "longhand" else _nested(Q, alpha)
    return max(alpha / (alpha - 1.0) * log_sum, 0.0)


def alpha_mi_gaussian(j: GaussianJoint, alpha: float, quad: Optional[QuadratureSpec] = None) -> float:
    """Alpha-mutual information of the clipped Gaussian mechanism, in nats.

    Inner integral over x~ in [-C, C], outer over y, both adaptive.

    Raises:
        DivergenceError: If either integral misses its tolerance.
    """
    _check_alpha(alpha)
    quad = quad or QuadratureSpec()
    t = j.trunc
    sigma_z = j.sigma_z
    norm = 1.0 / (t.sigma_x * t.mass)

    def p_x(x: float) -> float:
        return norm * std_normal_pdf(x / t.sigma_x)

    def inner(y: float) -> float:
        value, abserr, *info = integrate.quad(
            lambda x: p_x(x) * (std_normal_pdf((y - x) / sigma_z) / sigma_z) ** alpha,
            -t.clip_c,
            t.clip_c,
            epsabs=0.0,
            epsrel=INNER_TOL,
            limit=quad.subinterval_limit,
            full_output=1,
        )
        if len(info) > 1 and abserr > INNER_TOL * max(abs(value), 1e-300):
            raise DivergenceError(f"inner alpha-MI integral failed at y={y:.6g}, alpha={alpha}: {info[1]}")
        return value ** (1.0 / alpha)

    half_width = quad.half_width_in_sigmas * j.sigma_y
    value, abserr, *info = integrate.quad(
        inner,
        -half_width,
        half_width,
        epsabs=0.0,
        epsrel=OUTER_TOL,
        limit=quad.subinterval_limit,
        full_output=1,
    )
    if len(info) > 1 and abserr > OUTER_TOL * abs(value):
        raise DivergenceError(f"outer alpha-MI integral failed for alpha={alpha}: {info[1]}")
    if not value > 0:
        raise DivergenceError(f"alpha-MI integral is not positive for alpha={alpha}: {value!r}")
    logger.debug("alpha-MI integral: alpha=%.6g value=%.12g abserr=%.3g", alpha, value, abserr)
    return max(alpha / (alpha - 1.0) * math.log(value), 0.0)
