"""Rate-region chain I <= C <= min{H(X~), H(Y)} and the random-response search."""
from typing import List

import numpy as np

from .entropy import conditional_entropy, joint_entropy, marginal_entropies, mutual_information_discrete
from .mixture import CANONICAL, MixtureMapping, bsc_mixture
from .models import BscMixtureParams, JointPmf, RateChain, RrSweepRow
from .witsenhausen import wci_lower_bound_discrete

GRID_STEP = 0.05


def rate_chain(Q: JointPmf) -> RateChain:
    """Evaluate every term of the chain for one joint pmf."""
    h_x, h_y = marginal_entropies(Q)
    return RateChain(
        h_x=h_x,
        h_y=h_y,
        h_joint=joint_entropy(Q),
        mutual_info=mutual_information_discrete(Q),
        wci_lower=wci_lower_bound_discrete(Q).wci_lower,
        cond_entropy_y_given_x=conditional_entropy(Q),
    )


def rr_sweep(count: int, seed: int, mapping: MixtureMapping = CANONICAL) -> List[RrSweepRow]:
    """Random search over BSC-mixture parameters on a 0.05 grid.

    Row i uses the generator seeded with (seed, i). Rows whose WCI bound
    exceeds the mutual information are ``flagged``.
    """
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    steps = int(round(1.0 / GRID_STEP))
    rows = []
    for index in range(count):
        rng = np.random.default_rng([seed, index])
        values = rng.integers(0, steps + 1, size=6) * GRID_STEP
        params = BscMixtureParams(**dict(zip(("p1", "p2", "p3", "p4", "c", "d"), map(float, values))))
        rows.append(RrSweepRow(index=index, params=params, chain=rate_chain(bsc_mixture(params, mapping))))
    return rows
