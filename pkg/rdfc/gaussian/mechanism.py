"""Noise calibration and the output law of the clipped Gaussian mechanism."""
import logging
import math
from typing import Optional, Union

import numpy as np

from ..common.errors import DomainError
from ..stats import erf, sample_clipped_gaussian, std_normal_cdf, std_normal_pdf, trunc_gauss_stats
from .models import GaussianJoint, GaussianLdpConfig

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

# Gauss-Legendre nodes on [-1, 1] for the CDF convolution integral
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(200)
_CDF_CHUNK = 20_000


def calibrate_noise(clip_c: float, epsilon: float, delta: float) -> float:
    """Noise variance of the Gaussian mechanism for l2-sensitivity 2C.

    Args:
        clip_c: Clipping bound C > 0.
        epsilon: Privacy parameter, 0 < epsilon <= 1.
        delta: Privacy parameter, 0 < delta < 1.25.

    Returns:
        float: 8 C^2 ln(1.25 / delta) / epsilon^2.

    Raises:
        DomainError: If an argument lies outside its range.
    """
    if not clip_c > 0:
        raise DomainError(f"clip bound must be positive, got {clip_c}")
    if not 0 < epsilon <= 1:
        raise DomainError(f"epsilon must satisfy 0 < epsilon <= 1 for this calibration, got {epsilon}")
    if not 0 < delta < 1.25:
        raise DomainError(f"delta must satisfy 0 < delta < 1.25, got {delta}")
    if delta >= 1:
        logger.warning("delta=%s >= 1 makes the (epsilon, delta) guarantee vacuous", delta)
    return 8.0 * clip_c**2 / epsilon**2 * math.log(1.25 / delta)


def build_joint(cfg: GaussianLdpConfig) -> GaussianJoint:
    """Derive the (X~, Y) statistics for a scenario."""
    trunc = trunc_gauss_stats(cfg.sigma_x, cfg.clip_c)
    sigma_z_sq = calibrate_noise(cfg.clip_c, cfg.epsilon, cfg.delta)
    joint = GaussianJoint.compose(trunc, sigma_z_sq)
    logger.debug(
        "joint: beta=%.6g var_trunc=%.6g sigma_z^2=%.6g rho=%.6g",
        trunc.beta, trunc.var_trunc, sigma_z_sq, joint.rho,
    )
    return joint


def output_pdf(j: GaussianJoint, y: ArrayLike) -> ArrayLike:
    """Density of Y = X~ + Z~ (clipped Gaussian convolved with Gaussian noise).

    Completing the square in x gives, with s^2 = sigma_x^2 + sigma_z^2,
    p_Y(y) = phi(y/s) / (s erf(beta/sqrt2)) * [Phi((C - mu)/tau) - Phi((-C - mu)/tau)]
    where mu = sigma_x^2 y / s^2 and tau = sigma_x sigma_z / s.
    """
    y = np.asarray(y, dtype=float)
    sigma_x = j.trunc.sigma_x
    clip_c = j.trunc.clip_c
    s_sq = sigma_x**2 + j.sigma_z_sq
    s = math.sqrt(s_sq)
    mu = sigma_x**2 * y / s_sq
    tau = sigma_x * j.sigma_z / s
    window = std_normal_cdf((clip_c - mu) / tau) - std_normal_cdf((-clip_c - mu) / tau)
    dens = std_normal_pdf(y / s) / (s * j.trunc.mass) * window
    return float(dens) if np.ndim(dens) == 0 else dens


def output_pdf_literal(j: GaussianJoint, y: ArrayLike) -> ArrayLike:
    """The printed closed form, with beta_bar = C / sigma_X~^2 and m(y) = y / sigma_Y.

    Kept for comparison only: it mixes the clipped and unclipped scales and
    is not the density of the generative model.
    """
    y = np.asarray(y, dtype=float)
    sigma_t = j.trunc.sigma_trunc
    sigma_y = j.sigma_y
    beta_bar = j.trunc.clip_c / j.trunc.var_trunc
    scale = j.sigma_z * sigma_y
    window = std_normal_cdf((beta_bar * j.sigma_y_sq - sigma_t * y) / scale) - std_normal_cdf(
        -(beta_bar * j.sigma_y_sq + sigma_t * y) / scale
    )
    dens = std_normal_pdf(y / sigma_y) * window / (float(erf(beta_bar / math.sqrt(2.0))) * sigma_y)
    return float(dens) if np.ndim(dens) == 0 else dens


def output_cdf(j: GaussianJoint, y: ArrayLike) -> ArrayLike:
    """CDF of Y: integral over [-C, C] of p_X~(x) Phi((y - x) / sigma_z) dx."""
    y = np.asarray(y, dtype=float)
    clip_c = j.trunc.clip_c
    x = clip_c * _GL_NODES
    weights = clip_c * _GL_WEIGHTS * std_normal_pdf(x / j.trunc.sigma_x) / (j.trunc.sigma_x * j.trunc.mass)
    flat = y.reshape(-1)
    cdf = np.empty(flat.size)
    for start in range(0, flat.size, _CDF_CHUNK):
        block = flat[start:start + _CDF_CHUNK, None]
        cdf[start:start + _CDF_CHUNK] = std_normal_cdf((block - x[None, :]) / j.sigma_z) @ weights
    cdf = np.clip(cdf, 0.0, 1.0).reshape(y.shape)
    return float(cdf) if cdf.ndim == 0 else cdf


def sample_output(
    j: GaussianJoint,
    size: int,
    rng: Optional[np.random.Generator] = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Draw (x~, y) pairs from the clip-then-add-noise model."""
    rng = rng or np.random.default_rng()
    x = sample_clipped_gaussian(j.trunc.sigma_x, j.trunc.clip_c, size, rng)
    y = x + rng.normal(0.0, j.sigma_z, size=size)
    return x, y
