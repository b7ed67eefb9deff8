"""Statistics of a zero-mean Gaussian clipped (truncated) to [-C, C]."""
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ..common.errors import DomainError
from .special import erf, gamma_ratio, std_normal_pdf

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class TruncGaussStats:
    """Moments of X ~ N(0, sigma_x^2) conditioned on |X| <= clip_c.

    Attributes:
        sigma_x: Standard deviation before clipping.
        clip_c: Clipping bound C.
        beta: C / sigma_x.
        gamma_beta: gamma(beta), in (0, 0.5).
        var_trunc: Variance of the clipped variable, sigma_x^2 (1 - 2 gamma(beta)).
        diff_entropy: Differential entropy h(X~) in nats.
    """
    sigma_x: float
    clip_c: float
    beta: float
    gamma_beta: float
    var_trunc: float
    diff_entropy: float

    @property
    def sigma_trunc(self) -> float:
        """Standard deviation of the clipped variable."""
        return math.sqrt(self.var_trunc)

    @property
    def mass(self) -> float:
        """P(|X| <= C) = erf(beta / sqrt 2), the truncation normaliser."""
        return float(erf(self.beta / _SQRT2))


def trunc_gauss_stats(sigma_x: float, clip_c: float) -> TruncGaussStats:
    """Compute the clipped-Gaussian statistics.

    Args:
        sigma_x: Pre-clipping standard deviation, > 0.
        clip_c: Clipping bound, > 0.

    Returns:
        TruncGaussStats: beta, gamma(beta), variance and entropy.

    Raises:
        DomainError: If either argument is not strictly positive.
    """
    if not (sigma_x > 0 and clip_c > 0):
        raise DomainError(
            f"sigma_x and clip_c must be positive, got sigma_x={sigma_x}, clip_c={clip_c}"
        )
    beta = clip_c / sigma_x
    gamma_beta = float(gamma_ratio(beta))
    var_trunc = sigma_x**2 * (1.0 - 2.0 * gamma_beta)
    mass = float(erf(beta / _SQRT2))
    diff_entropy = (
        math.log(math.sqrt(2.0 * math.pi * math.e) * sigma_x * mass) - gamma_beta
    )
    return TruncGaussStats(
        sigma_x=sigma_x,
        clip_c=clip_c,
        beta=beta,
        gamma_beta=gamma_beta,
        var_trunc=var_trunc,
        diff_entropy=diff_entropy,
    )


def trunc_gauss_pdf(stats: TruncGaussStats, x: Union[float, np.ndarray]):
    """Density of the clipped variable; zero outside [-C, C]."""
    x = np.asarray(x, dtype=float)
    dens = std_normal_pdf(x / stats.sigma_x) / (stats.sigma_x * stats.mass)
    value = np.where(np.abs(x) <= stats.clip_c, dens, 0.0)
    return float(value) if value.ndim == 0 else value


def sample_clipped_gaussian(
    sigma_x: float,
    clip_c: float,
    size: int,
    rng: Optional[np.random.Generator] = None,
) -> np.ndarray:
    """Draw ``size`` samples of N(0, sigma_x^2) conditioned on |x| <= C.

    Rejection sampling: draws that fall outside the clip range are discarded
    and redrawn.
    """
    rng = rng or np.random.default_rng()
    acceptance = max(float(erf(clip_c / (sigma_x * _SQRT2))), 1e-3)
    out = np.empty(0)
    while out.size < size:
        batch = int(1.2 * (size - out.size) / acceptance) + 16
        draw = rng.normal(0.0, sigma_x, size=batch)
        out = np.concatenate([out, draw[np.abs(draw) <= clip_c]])
    return out[:size]
