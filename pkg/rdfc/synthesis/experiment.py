"""Exact synthesis experiments over independent random codebooks."""
import logging

import numpy as np

from ..common.errors import NumericalError
from .codebook import build_codebook
from .induced import check_encoder_size, check_joint_size, iid_marginal, induced_joint_exact, product_target, single_letter_marginal, tv_distance
from .models import SynthesisConfig, SynthesisOutcome

logger = logging.getLogger(__name__)

_NON_EXPANSIVE_TOL = 1e-12


def synthesis_experiment(cfg: SynthesisConfig) -> SynthesisOutcome:
    """Exact TV to Q^n for ``cfg.trials`` codebooks seeded by (seed, trial).

    Raises:
        CapacityError: If the joint law, a likelihood matrix or a codebook
            exceeds its cap.
        NumericalError: If the single-letter TV exceeds the sequence TV.
    """
    scheme, n = cfg.scheme, cfg.n
    check_joint_size(scheme, n)
    M, M0 = cfg.codebook_sizes
    check_encoder_size(scheme, n, M)
    target = scheme.target()
    target_n = product_target(target, n)
    p_xn = iid_marginal(scheme.p_x, n)
    logger.debug("synthesis n=%d M=%d M0=%d trials=%d", n, M, M0, cfg.trials)

    tvs, single, marginal_error = [], [], 0.0
    for trial in range(cfg.trials):
        codebook = build_codebook(scheme, n, M, M0, seed=[cfg.seed, trial])
        induced = induced_joint_exact(codebook, scheme, n)
        tv = tv_distance(induced, target_n)
        tv_1 = tv_distance(single_letter_marginal(induced, n, scheme.x_size, scheme.y_size), target)
        if tv_1 > tv + _NON_EXPANSIVE_TOL:
            raise NumericalError(f"single-letter TV {tv_1!r} exceeds sequence TV {tv!r} in trial {trial}")
        marginal_error = max(marginal_error, float(np.abs(induced.sum(axis=1) - p_xn).max()))
        tvs.append(tv)
        single.append(tv_1)

    return SynthesisOutcome(
        n=n,
        rate_R=cfg.rate_R,
        rate_R0=cfg.rate_R0,
        codebook_sizes=(M, M0),
        tv_per_trial=tuple(tvs),
        single_letter_tv=tuple(single),
        marginal_error=marginal_error,
    )
