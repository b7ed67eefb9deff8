"""Rate-region membership for a given decomposition."""
from typing import NamedTuple

import numpy as np
from scipy import special

from .models import CoordinationScheme


class RegionCheck(NamedTuple):
    ok_R: bool
    ok_sum: bool
    I_xu: float
    I_xyu: float


def _entropy(p: np.ndarray) -> float:
    return float(special.entr(p).sum())


def mutual_information_2d(joint: np.ndarray) -> float:
    """I(A;B) in nats for a joint given as a 2-D array over (a, b)."""
    value = _entropy(joint.sum(axis=1)) + _entropy(joint.sum(axis=0)) - _entropy(joint)
    return max(value, 0.0)


def scheme_informations(scheme: CoordinationScheme) -> tuple[float, float]:
    """(I(X~;U), I(X~,Y;U)) of the decomposition."""
    pu = scheme.pu
    joint_ux = pu[:, None] * scheme.px_u
    joint_uxy = np.einsum("u,ux,uy->uxy", pu, scheme.px_u, scheme.py_u).reshape(scheme.u_size, -1)
    return mutual_information_2d(joint_ux), mutual_information_2d(joint_uxy)


def target_mutual_information(scheme: CoordinationScheme) -> float:
    """I(X~;Y) of the induced target; never exceeds I(X~;U)."""
    return mutual_information_2d(scheme.target())


def rate_region_check(scheme: CoordinationScheme, rate_R: float, rate_R0: float) -> RegionCheck:
    """Whether (R, R0) satisfies R >= I(X~;U) and R + R0 >= I(X~,Y;U) for this U."""
    i_xu, i_xyu = scheme_informations(scheme)
    return RegionCheck(
        ok_R=rate_R >= i_xu,
        ok_sum=rate_R + rate_R0 >= i_xyu,
        I_xu=i_xu,
        I_xyu=i_xyu,
    )
