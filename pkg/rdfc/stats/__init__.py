"""Scalar special functions and truncated-Gaussian statistics."""
from .special import erf, gamma_ratio, std_normal_cdf, std_normal_pdf
from .truncated import (
    TruncGaussStats,
    sample_clipped_gaussian,
    trunc_gauss_pdf,
    trunc_gauss_stats,
)

__all__ = [
    "erf",
    "gamma_ratio",
    "std_normal_cdf",
    "std_normal_pdf",
    "TruncGaussStats",
    "sample_clipped_gaussian",
    "trunc_gauss_pdf",
    "trunc_gauss_stats",
]
