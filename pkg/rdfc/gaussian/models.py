"""Data models for the Gaussian-LDP scenario."""
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..stats import TruncGaussStats


class GaussianLdpConfig(BaseModel):
    """Scenario parameters of the Gaussian mechanism.

    epsilon is capped at 1, the validity range of the classic calibration
    sigma^2 = 8 C^2 ln(1.25 / delta) / epsilon^2.
    """
    model_config = ConfigDict(frozen=True)

    sigma_x: float = Field(gt=0)
    clip_c: float = Field(default=1.0, gt=0)
    epsilon: float
    delta: float = Field(gt=0, lt=1)

    @field_validator("epsilon")
    @classmethod
    def _check_epsilon(cls, value: float) -> float:
        if not 0 < value <= 1:
            raise ValueError(f"epsilon must satisfy 0 < epsilon <= 1 for the Gaussian mechanism calibration, got {value}")
        return value


class QuadratureSpec(BaseModel):
    """Adaptive quadrature settings, serialisable as JSON."""
    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(default=1e-9, gt=0)
    max_evals: int = Field(default=21 * 400, ge=21)
    half_width_in_sigmas: float = Field(default=12.0, gt=0)

    @property
    def subinterval_limit(self) -> int:
        """QUADPACK subinterval budget; each subinterval costs 21 evaluations."""
        return max(1, self.max_evals // 21)


class ParamRanges(BaseModel):
    """Search box for the random sweep; defaults follow the Table 1 regime."""
    sigma_x: Tuple[float, float] = (0.1, 0.7)
    epsilon: Tuple[float, float] = (0.1, 1.0)
    delta: Tuple[float, float] = (0.001, 0.01)
    clip_c: float = Field(default=1.0, gt=0)

    @model_validator(mode="after")
    def _check_bounds(self) -> "ParamRanges":
        for name in ("sigma_x", "epsilon", "delta"):
            low, high = getattr(self, name)
            if not 0 < low < high:
                raise ValueError(f"{name} range must satisfy 0 < low < high, got {(low, high)}")
        if self.epsilon[1] > 1:
            raise ValueError("epsilon range must stay within (0, 1]")
        if self.delta[1] >= 1:
            raise ValueError("delta range must stay below 1")
        return self


@dataclass(frozen=True)
class GaussianJoint:
    """Second-order statistics of (X~, Y) with Y = X~ + Z~.

    Attributes:
        trunc: Statistics of the clipped input X~.
        sigma_z_sq: Noise variance.
        sigma_y_sq: Output variance, var_trunc + sigma_z_sq.
        rho: Correlation coefficient sigma_X~ / sigma_Y.
    """
    trunc: TruncGaussStats
    sigma_z_sq: float
    sigma_y_sq: float
    rho: float

    @classmethod
    def compose(cls, trunc: TruncGaussStats, sigma_z_sq: float) -> "GaussianJoint":
        """Combine input statistics with an independent noise variance."""
        sigma_y_sq = trunc.var_trunc + sigma_z_sq
        return cls(
            trunc=trunc,
            sigma_z_sq=sigma_z_sq,
            sigma_y_sq=sigma_y_sq,
            rho=math.sqrt(trunc.var_trunc / sigma_y_sq),
        )

    @property
    def sigma_z(self) -> float:
        return math.sqrt(self.sigma_z_sq)

    @property
    def sigma_y(self) -> float:
        return math.sqrt(self.sigma_y_sq)


@dataclass(frozen=True)
class GaussianRatePoint:
    """Both corner points and the intermediate quantities of the WCI bound.

    All values in nats. ``mutual_info`` stays None until the quadrature has
    been run (see ``corner_points``).
    """
    wci_lower: float
    wci_raw: float
    h_joint: float
    h_joint_gaussian: float
    wci_gaussian: float
    mutual_info: Optional[float] = None

    @property
    def ratio(self) -> float:
        """wci_lower / mutual_info; inf when the mutual information vanishes."""
        if self.mutual_info is None:
            raise ValueError("mutual information has not been computed")
        return self.wci_lower / self.mutual_info if self.mutual_info > 0 else math.inf


@dataclass(frozen=True)
class SweepRow:
    """One evaluated configuration of the random search."""
    index: int
    sigma_x: float
    epsilon: float
    delta: float
    wci_lower: float
    mutual_info: float
    ratio: float
    flagged: bool
