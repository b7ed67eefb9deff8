"""Clipped-Gaussian input with the Gaussian (epsilon, delta)-LDP mechanism."""
from .bounds import (
    corner_points,
    mutual_information,
    output_entropy,
    table_ratio,
    wci_lower_bound,
)
from .mechanism import (
    build_joint,
    calibrate_noise,
    output_cdf,
    output_pdf,
    output_pdf_literal,
    sample_output,
)
from .models import (
    GaussianJoint,
    GaussianLdpConfig,
    GaussianRatePoint,
    ParamRanges,
    QuadratureSpec,
    SweepRow,
)
from .sweep import sweep

__all__ = [
    "corner_points",
    "mutual_information",
    "output_entropy",
    "table_ratio",
    "wci_lower_bound",
    "build_joint",
    "calibrate_noise",
    "output_cdf",
    "output_pdf",
    "output_pdf_literal",
    "sample_output",
    "GaussianJoint",
    "GaussianLdpConfig",
    "GaussianRatePoint",
    "ParamRanges",
    "QuadratureSpec",
    "SweepRow",
    "sweep",
]
