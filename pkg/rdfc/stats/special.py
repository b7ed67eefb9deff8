"""Standard normal density, distribution and the truncation ratio gamma.

All functions accept floats or numpy arrays and return the same shape.
Precision is that of ``scipy.special`` (better than 1e-12 absolute).
"""
import math
from typing import Union

import numpy as np
from scipy import special

from ..common.errors import DomainError

ArrayLike = Union[float, np.ndarray]

_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)
_SQRT2 = math.sqrt(2.0)


def _unwrap(value: np.ndarray) -> ArrayLike:
    return float(value) if np.ndim(value) == 0 else value


def std_normal_pdf(a: ArrayLike) -> ArrayLike:
    """phi(a) = exp(-a^2 / 2) / sqrt(2 pi)."""
    a = np.asarray(a, dtype=float)
    return _unwrap(_INV_SQRT_2PI * np.exp(-0.5 * a * a))


def std_normal_cdf(a: ArrayLike) -> ArrayLike:
    """Phi(a) = 0.5 (1 + erf(a / sqrt 2)).

    Evaluated with ``ndtr`` so the lower tail keeps full relative precision.
    """
    return _unwrap(special.ndtr(np.asarray(a, dtype=float)))


def erf(a: ArrayLike) -> ArrayLike:
    """Error function, (2 / sqrt(pi)) * integral_0^a exp(-t^2) dt."""
    return _unwrap(special.erf(np.asarray(a, dtype=float)))


def gamma_ratio(a: ArrayLike) -> ArrayLike:
    """gamma(a) = a phi(a) / erf(a / sqrt 2), defined for a > 0.

    Strictly decreasing from 0.5 (a -> 0+) to 0 (a -> inf).

    Raises:
        DomainError: If any a <= 0.
    """
    a = np.asarray(a, dtype=float)
    if np.any(~(a > 0)):
        raise DomainError(f"gamma_ratio requires a > 0, got {a}")
    # erf(x) ~ 2x/sqrt(pi) below this point; the quotient is then a closed form
    small = a < 1e-6
    safe = np.where(small, 1.0, a)
    value = safe * _INV_SQRT_2PI * np.exp(-0.5 * safe * safe) / special.erf(safe / _SQRT2)
    value = np.where(small, 0.5 * np.exp(-0.5 * a * a), value)
    return _unwrap(value)
