"""Random search over Gaussian-LDP scenarios."""
import logging
import math
from typing import List, Optional

import numpy as np

from .bounds import corner_points
from .models import GaussianLdpConfig, ParamRanges, QuadratureSpec, SweepRow

logger = logging.getLogger(__name__)


def _row_rng(seed: int, index: int) -> np.random.Generator:
    # PCG64 keyed by SeedSequence([seed, index]): row i depends on (seed, i) only
    return np.random.default_rng([seed, index])


def sweep(
    ranges: ParamRanges,
    count: int,
    seed: int,
    quad: Optional[QuadratureSpec] = None,
) -> List[SweepRow]:
    """Evaluate ``count`` uniformly drawn scenarios from ``ranges``.

    Rows where the WCI lower bound exceeds the mutual information are
    flagged: there the bound is more informative than the generic
    I <= C chain.

    Args:
        ranges: Search box for sigma_x, epsilon and delta; clip bound fixed.
        count: Number of rows, >= 1.
        seed: Master seed.
        quad: Quadrature settings for the mutual information.

    Returns:
        List[SweepRow]: Rows ordered by index.
    """
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")

    rows = []
    for index in range(count):
        rng = _row_rng(seed, index)
        sigma_x, epsilon, delta = (
            rng.uniform(*ranges.sigma_x),
            rng.uniform(*ranges.epsilon),
            rng.uniform(*ranges.delta),
        )
        cfg = GaussianLdpConfig(
            sigma_x=float(sigma_x),
            clip_c=ranges.clip_c,
            epsilon=float(epsilon),
            delta=float(delta),
        )
        point = corner_points(cfg, quad)
        ratio = point.wci_lower / point.mutual_info if point.mutual_info > 0 else math.inf
        rows.append(
            SweepRow(
                index=index,
                sigma_x=cfg.sigma_x,
                epsilon=cfg.epsilon,
                delta=cfg.delta,
                wci_lower=point.wci_lower,
                mutual_info=point.mutual_info,
                ratio=ratio,
                flagged=point.wci_lower > point.mutual_info,
            )
        )

    logger.debug("sweep: %d of %d rows flagged", sum(r.flagged for r in rows), count)
    return rows
