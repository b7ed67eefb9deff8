"""Symmetric random-response joint pmfs built from mixtures of BSCs.

A uniform bit W drives both sides; each side outputs two bits equal to
(W, W) flipped by correlated noise. On the Y side, given W = 0, the pair is
00 or 11 with total probability c (crossover p2 between them) and 01 or 10
with total probability 1 - c (crossover p4). The X~ side is analogous with
(d, p1, p3). Given W = 1 every bit is complemented.

Symbol order on both axes: 00, 01, 10, 11.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from ..common.errors import MappingAmbiguityError
from .entropy import mutual_information_discrete
from .models import BscMixtureParams, JointPmf
from .witsenhausen import wci_lower_bound_discrete

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MixtureMapping:
    """How (p1, p3) and the 01/10 symbols attach to the X~ side.

    swap_x: attach p3 to the weight d and p1 to 1 - d.
    relabel_x: exchange the X~ symbols 01 and 10.
    """
    swap_x: bool = False
    relabel_x: bool = False


CANONICAL = MixtureMapping()
CANDIDATES = tuple(MixtureMapping(s, r) for s, r in itertools.product((False, True), repeat=2))


def _side(weight: float, p_even: float, p_odd: float) -> np.ndarray:
    """P(bits | W = 0) over (00, 01, 10, 11)."""
    return np.array([
        weight * (1.0 - p_even),
        (1.0 - weight) * (1.0 - p_odd),
        (1.0 - weight) * p_odd,
        weight * p_even,
    ])


def bsc_mixture(params: BscMixtureParams, mapping: MixtureMapping = CANONICAL) -> JointPmf:
    """Build the 4 x 4 joint pmf Q[x~, y] of the BSC mixture.

    Q(x~, y) = 1/2 [P(x~|W=0) P(y|W=0) + P(x~|W=1) P(y|W=1)], which satisfies
    Q(x~, y) = Q(complement x~, complement y) exactly.
    """
    p1, p3 = (params.p3, params.p1) if mapping.swap_x else (params.p1, params.p3)
    x0 = _side(params.d, p1, p3)
    if mapping.relabel_x:
        x0 = x0[[0, 2, 1, 3]]
    y0 = _side(params.c, params.p2, params.p4)
    # complementing both bits reverses the symbol order
    x1, y1 = x0[::-1], y0[::-1]
    return JointPmf(0.5 * (np.outer(x0, y0) + np.outer(x1, y1)))


def disambiguate_mapping(
    references: Sequence[Tuple[BscMixtureParams, float, float]],
    tol: float = 1e-3,
) -> MixtureMapping:
    """Pick the parameter mapping that reproduces reference (I, WCI bound) pairs.

    The 01/10 relabel permutes rows of Q, which changes neither the mutual
    information nor the maxitrace, so mappings are compared up to it and
    the unrelabelled representative is returned.

    Args:
        references: (params, mutual information, WCI bound) triples.
        tol: Absolute tolerance on both values.

    Raises:
        MappingAmbiguityError: Unless exactly one class matches every row.
    """
    matching: List[MixtureMapping] = []
    for mapping in CANDIDATES:
        ok = True
        for params, mi_ref, wci_ref in references:
            Q = bsc_mixture(params, mapping)
            mi = mutual_information_discrete(Q)
            wci = wci_lower_bound_discrete(Q).wci_lower
            if abs(mi - mi_ref) > tol or abs(wci - wci_ref) > tol:
                ok = False
                break
        logger.debug("mapping %s: %s", mapping, "match" if ok else "no match")
        if ok:
            matching.append(mapping)

    classes = {m.swap_x for m in matching}
    if len(classes) != 1:
        raise MappingAmbiguityError(
            f"expected exactly one matching mapping class, found {len(classes)}: {matching}"
        )
    return MixtureMapping(swap_x=classes.pop(), relabel_x=False)
