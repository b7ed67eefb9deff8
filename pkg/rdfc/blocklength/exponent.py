"""Error exponent of the likelihood-encoder synthesis and the resulting delta_n."""
import logging
import math
from typing import Iterable, List, Optional

import numpy as np
from scipy import optimize

from ..common.errors import RateError
from .models import FblConfig, FblResult, RhoStar
from .sources import InfoDensitySource

logger = logging.getLogger(__name__)

GRID_POINTS = 32
BOUNDARY_TOL = 1e-6
RHO_MAX = 0.5
_RHO_FLOOR = 1e-9


def exponent_objective(src: InfoDensitySource, rate_R: float, rho: float) -> float:
    """g(rho) = rho (R - I_{1/(1-rho)})."""
    return rho * (rate_R - src.alpha_mutual_information(1.0 / (1.0 - rho)))


def rho_star(src: InfoDensitySource, rate_R: float, grid_points: int = GRID_POINTS) -> RhoStar:
    """Maximise g over (0, 1/2] with a coarse pre-scan and a bounded Brent refinement.

    The refinement searches between the neighbours of the best grid point;
    the result is the better of the refined point and the grid point.
    Refinement uses scipy's bounded Brent method in place of a plain
    golden-section search; it falls back to golden-section steps itself.

    Raises:
        RateError: If R does not exceed I(X~;Y), or g is non-positive on the whole grid.
    """
    mi = src.mutual_information()
    if not rate_R > mi:
        raise RateError(f"rate {rate_R:.6g} must exceed the mutual information {mi:.6g}")

    # cubic spacing resolves maximisers close to 0 when R is barely above I
    grid = RHO_MAX * (np.arange(1, grid_points + 1) / grid_points) ** 3
    values = np.array([exponent_objective(src, rate_R, rho) for rho in grid])
    if not np.any(values > 0):
        raise RateError(f"rho (R - I_alpha) <= 0 on the whole grid for R={rate_R:.6g}")
    best = int(np.argmax(values))

    lo = grid[best - 1] if best > 0 else _RHO_FLOOR
    hi = grid[best + 1] if best < grid_points - 1 else RHO_MAX
    res = optimize.minimize_scalar(
        lambda rho: -exponent_objective(src, rate_R, rho),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-10},
    )
    candidates = [(float(values[best]), float(grid[best])), (-float(res.fun), float(res.x))]
    exponent, rho = max(candidates)

    branch = "boundary" if RHO_MAX - rho <= BOUNDARY_TOL else "interior"
    if branch == "boundary" and rho != RHO_MAX:
        rho, exponent = RHO_MAX, exponent_objective(src, rate_R, RHO_MAX)
    alpha_mi = rate_R - exponent / rho
    logger.debug("rho*=%.9g exponent=%.9g branch=%s", rho, exponent, branch)
    return RhoStar(rho=rho, exponent=exponent, branch=branch, alpha_mi=alpha_mi)


def achieved_delta(delta: float, epsilon: float, a: float, delta_cap_n: float) -> float:
    """delta_n = delta + 2 (e^epsilon + 1) a Delta_n."""
    return delta + 2.0 * (math.exp(epsilon) + 1.0) * a * delta_cap_n


def _result(star: RhoStar, cfg: FblConfig) -> FblResult:
    n = cfg.n
    log_cap = math.log(cfg.K) - n * star.exponent
    if star.branch == "interior":
        log_cap -= 0.5 * (1.0 - star.rho) * math.log(n)
    delta_cap_n = math.exp(log_cap)
    return FblResult(
        n=n,
        rate_R=cfg.rate_R,
        rho_star=star.rho,
        exponent=star.exponent,
        branch=star.branch,
        delta_cap_n=delta_cap_n,
        delta_n=achieved_delta(cfg.delta, cfg.epsilon, cfg.a, delta_cap_n),
    )


def delta_n_bound(src: InfoDensitySource, cfg: FblConfig, star: Optional[RhoStar] = None) -> FblResult:
    """Total-variation bound Delta_n and the (epsilon, delta_n) it certifies.

    At rho* = 1/2 the exponent is (R - I_2)/2 and there is no polynomial
    prefactor; otherwise Delta_n carries n^{-(1-rho*)/2}.
    """
    star = star or rho_star(src, cfg.rate_R)
    return _result(star, cfg)


def blocklength_curve(src: InfoDensitySource, cfg: FblConfig, n_values: Iterable[int]) -> List[FblResult]:
    """delta_n_bound over several blocklengths; rho* does not depend on n."""
    star = rho_star(src, cfg.rate_R)
    return [_result(star, cfg.model_copy(update={"n": n})) for n in n_values]
