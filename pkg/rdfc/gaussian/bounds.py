"""Corner points of the rate region for the Gaussian-LDP scenario.

The lower bound on Wyner's common information compares the scenario with a
jointly Gaussian pair of the same covariance:

    C(X~;Y) >= { C(X~_g;Y_g) + h(X~,Y) - h(X~_g,Y_g) }^+

and the mutual information is h(Y) - h(Z~) with h(Y) from adaptive
quadrature of the exact output density.
"""
import logging
import math
from typing import Callable, Optional

import numpy as np
from scipy import integrate

from ..common.errors import NumericalError, QuadratureError
from .mechanism import build_joint, output_pdf, output_pdf_literal
from .models import GaussianJoint, GaussianLdpConfig, GaussianRatePoint, QuadratureSpec

logger = logging.getLogger(__name__)

_TWO_PI_E = 2.0 * math.pi * math.e
_TINY = 1e-300


def wci_lower_bound(j: GaussianJoint) -> GaussianRatePoint:
    """Lower bound on C(X~;Y) in nats, with its intermediate quantities.

    The bound is evaluated in its direct closed form and again as
    wci_gaussian + h_joint - h_joint_gaussian; the two must agree.

    Raises:
        NumericalError: If the two evaluations disagree by more than 1e-10.
    """
    t = j.trunc
    sigma_t = t.sigma_trunc
    sigma_y = j.sigma_y
    direct = (
        0.5 * math.log1p(2.0 * sigma_t / (sigma_y - sigma_t))
        + math.log(t.mass / math.sqrt(1.0 - 2.0 * t.gamma_beta))
        - t.gamma_beta
    )

    wci_gaussian = 0.5 * math.log((1.0 + j.rho) / (1.0 - j.rho))
    h_joint = math.log(_TWO_PI_E * t.sigma_x * t.mass * j.sigma_z) - t.gamma_beta
    h_joint_gaussian = math.log(_TWO_PI_E * sigma_t * j.sigma_z)
    decomposed = wci_gaussian + h_joint - h_joint_gaussian

    if not math.isclose(direct, decomposed, rel_tol=0.0, abs_tol=1e-10):
        raise NumericalError(
            f"WCI bound forms disagree: direct={direct!r}, decomposed={decomposed!r}"
        )
    logger.debug(
        "wci bound: C_g=%.6g h=%.6g h_g=%.6g raw=%.6g", wci_gaussian, h_joint, h_joint_gaussian, direct
    )
    return GaussianRatePoint(
        wci_lower=max(direct, 0.0),
        wci_raw=direct,
        h_joint=h_joint,
        h_joint_gaussian=h_joint_gaussian,
        wci_gaussian=wci_gaussian,
    )


def _quad(func: Callable[[float], float], half_width: float, quad: QuadratureSpec) -> float:
    value, abserr, *info = integrate.quad(
        func,
        -half_width,
        half_width,
        epsabs=quad.abs_tol,
        epsrel=0.0,
        limit=quad.subinterval_limit,
        full_output=1,
    )
    # a fourth element is only returned when QUADPACK flags a problem
    if len(info) > 1 and abserr > quad.abs_tol:
        raise QuadratureError(f"quadrature did not converge (error estimate {abserr:.3g}): {info[1]}")
    logger.debug("quad: value=%.12g abserr=%.3g evals=%d", value, abserr, info[0]["neval"])
    return value


def output_entropy(
    j: GaussianJoint,
    quad: Optional[QuadratureSpec] = None,
    literal_pdf: bool = False,
) -> float:
    """Differential entropy h(Y) in nats."""
    quad = quad or QuadratureSpec()
    pdf = output_pdf_literal if literal_pdf else output_pdf

    def integrand(y: float) -> float:
        p = pdf(j, y)
        return -p * math.log(max(p, _TINY))

    return _quad(integrand, quad.half_width_in_sigmas * j.sigma_y, quad)


def mutual_information(
    j: GaussianJoint,
    quad: Optional[QuadratureSpec] = None,
    literal_pdf: bool = False,
) -> float:
    """I(X~;Y) = h(Y) - 0.5 ln(2 pi e sigma_z^2), in nats.

    Args:
        j: Joint statistics.
        quad: Quadrature settings.
        literal_pdf: Integrate the printed closed form instead of the exact
            convolution density (comparison only).

    Raises:
        QuadratureError: If the entropy integral misses its tolerance.
    """
    h_y = output_entropy(j, quad, literal_pdf=literal_pdf)
    value = h_y - 0.5 * math.log(_TWO_PI_E * j.sigma_z_sq)
    if value < 0:
        logger.debug("clamping mutual information %.3g to zero", value)
        value = 0.0
    return value


def corner_points(
    cfg: GaussianLdpConfig,
    quad: Optional[QuadratureSpec] = None,
    literal_pdf: bool = False,
) -> GaussianRatePoint:
    """Both corner points (WCI lower bound and mutual information) for a scenario."""
    j = build_joint(cfg)
    point = wci_lower_bound(j)
    mi = mutual_information(j, quad, literal_pdf=literal_pdf)
    return GaussianRatePoint(
        wci_lower=point.wci_lower,
        wci_raw=point.wci_raw,
        h_joint=point.h_joint,
        h_joint_gaussian=point.h_joint_gaussian,
        wci_gaussian=point.wci_gaussian,
        mutual_info=mi,
    )


def table_ratio(wci: float, mi: float, decimals: int = 4) -> float:
    """Ratio of the two corner points after rounding each to ``decimals`` places.

    The published tables form their ratio columns from the printed values.
    When the denominator rounds to zero both values are used unrounded.
    """
    den = round(mi, decimals)
    if den == 0:
        return wci / mi if mi > 0 else float(np.inf)
    return round(wci, decimals) / den
