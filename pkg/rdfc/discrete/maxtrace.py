"""Maxitrace: the largest sum of matched entries over all permutations."""
import logging
from typing import Literal, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..common.errors import CapacityError, DomainError
from .models import JointPmf

logger = logging.getLogger(__name__)

EXHAUSTIVE_CAP = 12
_TIE_TOL = 1e-15

Mode = Literal["auto", "exhaustive", "assignment"]


def _exhaustive(q: np.ndarray) -> Tuple[int, ...]:
    """Exact search over all permutations by dynamic programming on column subsets.

    best[mask] is the largest sum obtainable for rows popcount(mask)..k-1
    using the columns not in mask. Reconstruction picks the smallest column
    at every row, which yields the lexicographically smallest maximiser.
    """
    k = q.shape[0]
    full = (1 << k) - 1
    best = np.full(1 << k, -np.inf)
    best[full] = 0.0
    popcount = np.array([bin(m).count("1") for m in range(1 << k)])
    for mask in range(full - 1, -1, -1):
        row = popcount[mask]
        for col in range(k):
            bit = 1 << col
            if not mask & bit:
                best[mask] = max(best[mask], q[row, col] + best[mask | bit])

    perm = []
    mask = 0
    for row in range(k):
        for col in range(k):
            bit = 1 << col
            if not mask & bit and q[row, col] + best[mask | bit] >= best[mask] - _TIE_TOL * k:
                perm.append(col)
                mask |= bit
                break
    return tuple(perm)


def _assignment(q: np.ndarray) -> Tuple[int, ...]:
    rows, cols = linear_sum_assignment(q, maximize=True)
    return tuple(int(c) for c in cols[np.argsort(rows)])


def maxtrace(Q: JointPmf, mode: Mode = "auto") -> Tuple[float, Tuple[int, ...]]:
    """Maximise sum_i Q[i, pi(i)] over permutations pi.

    Args:
        Q: Joint pmf.
        mode: "exhaustive" (exact subset search, k <= 12, ties broken towards
            the lexicographically smallest permutation), "assignment" (Hungarian
            solver, any k) or "auto" (exhaustive when allowed).

    Returns:
        Tuple[float, Tuple[int, ...]]: The maxitrace and its permutation
        (0-based column for each row).

    Raises:
        CapacityError: If exhaustive mode is requested above the cap.
    """
    k = Q.k
    if mode == "auto":
        mode = "exhaustive" if k <= EXHAUSTIVE_CAP else "assignment"
    if mode == "exhaustive":
        if k > EXHAUSTIVE_CAP:
            raise CapacityError(
                f"exhaustive maxtrace is capped at k={EXHAUSTIVE_CAP}, got k={k}; use mode='assignment'"
            )
        perm = _exhaustive(Q.q)
    elif mode == "assignment":
        perm = _assignment(Q.q)
    else:
        raise DomainError(f"unknown maxtrace mode {mode!r}")

    value = float(Q.q[np.arange(k), list(perm)].sum())
    logger.debug("maxtrace(k=%d, %s) = %.12g via %s", k, mode, value, perm)
    return value, perm
