"""Exact small-blocklength channel synthesis with a likelihood encoder."""
from .codebook import build_codebook, likelihood_encoder_distribution
from .experiment import synthesis_experiment
from .induced import (
    check_encoder_size,
    check_joint_size,
    iid_marginal,
    induced_joint_exact,
    product_target,
    sequences,
    single_letter_marginal,
    tv_distance,
)
from .models import CoordinationScheme, SynthesisConfig, SynthesisOutcome, codebook_size
from .region import (
    RegionCheck,
    mutual_information_2d,
    rate_region_check,
    scheme_informations,
    target_mutual_information,
)

__all__ = [
    "build_codebook",
    "likelihood_encoder_distribution",
    "synthesis_experiment",
    "check_encoder_size",
    "check_joint_size",
    "iid_marginal",
    "induced_joint_exact",
    "product_target",
    "sequences",
    "single_letter_marginal",
    "tv_distance",
    "CoordinationScheme",
    "SynthesisConfig",
    "SynthesisOutcome",
    "codebook_size",
    "RegionCheck",
    "mutual_information_2d",
    "rate_region_check",
    "scheme_informations",
    "target_mutual_information",
]
