"""Sources of information density: finite joints and the Gaussian mechanism."""
import math
from dataclasses import dataclass, field
from typing import Literal, Optional, Protocol, runtime_checkable

from ..common.errors import SupportError
from ..discrete.entropy import mutual_information_discrete
from ..discrete.models import JointPmf
from ..gaussian.bounds import mutual_information
from ..gaussian.mechanism import build_joint, output_pdf
from ..gaussian.models import GaussianJoint, GaussianLdpConfig, QuadratureSpec
from ..stats import std_normal_pdf
from .alpha_mi import Method, alpha_mi_discrete, alpha_mi_gaussian


@runtime_checkable
class InfoDensitySource(Protocol):
    """What the exponent search needs from a joint law of (X~, Y)."""

    kind: str

    def info_density(self, x: float, y: float) -> float:
        ...

    def mutual_information(self) -> float:
        ...

    def alpha_mutual_information(self, alpha: float) -> float:
        ...


@dataclass(frozen=True)
class DiscreteSource:
    """A finite joint pmf; symbols are row/column indices."""
    pmf: JointPmf
    method: Method = "nested"
    kind: Literal["discrete"] = field(default="discrete", init=False)

    def info_density(self, x: int, y: int) -> float:
        k = self.pmf.k
        if not (0 <= x < k and 0 <= y < k) or self.pmf.q[x, y] <= 0:
            raise SupportError(f"({x}, {y}) lies outside the support of the joint pmf")
        return math.log(self.pmf.q[x, y] / (self.pmf.p_x[x] * self.pmf.p_y[y]))

    def mutual_information(self) -> float:
        return mutual_information_discrete(self.pmf)

    def alpha_mutual_information(self, alpha: float) -> float:
        return alpha_mi_discrete(self.pmf, alpha, method=self.method)


@dataclass(frozen=True)
class GaussianSource:
    """The clipped Gaussian input with additive Gaussian noise."""
    joint: GaussianJoint
    quad: Optional[QuadratureSpec] = None
    kind: Literal["gaussian-ldp"] = field(default="gaussian-ldp", init=False)

    @classmethod
    def from_config(cls, cfg: GaussianLdpConfig, quad: Optional[QuadratureSpec] = None) -> "GaussianSource":
        return cls(build_joint(cfg), quad)

    def info_density(self, x: float, y: float) -> float:
        if abs(x) > self.joint.trunc.clip_c or not math.isfinite(y):
            raise SupportError(f"x~={x} lies outside [-C, C] or y={y} is not finite")
        sigma_z = self.joint.sigma_z
        log_cond = math.log(std_normal_pdf((y - x) / sigma_z) / sigma_z)
        return log_cond - math.log(output_pdf(self.joint, y))

    def mutual_information(self) -> float:
        return mutual_information(self.joint, self.quad)

    def alpha_mutual_information(self, alpha: float) -> float:
        return alpha_mi_gaussian(self.joint, alpha, self.quad)
