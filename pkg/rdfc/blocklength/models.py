"""Data models for finite-blocklength privacy guarantees."""
from dataclasses import asdict, dataclass
from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field


class FblConfig(BaseModel):
    """Inputs of the finite-blocklength bound.

    ``K`` is the unspecified constant of the total-variation bound; results
    always report the exponent next to it so conclusions do not depend on it.
    """
    model_config = ConfigDict(frozen=True)

    rate_R: float = Field(gt=0, description="Rate in nats per symbol")
    n: int = Field(ge=1)
    epsilon: float = Field(ge=0)
    delta: float = Field(ge=0, lt=1)
    a: float = Field(default=2.0, gt=1, description="Markov-inequality slack")
    K: float = Field(default=1.0, gt=0)


@dataclass(frozen=True)
class RhoStar:
    """Maximiser of rho (R - I_{1/(1-rho)}) over (0, 1/2].

    branch is "boundary" when rho sits at 1/2, otherwise "interior".
    """
    rho: float
    exponent: float
    branch: str
    alpha_mi: float

    @property
    def alpha(self) -> float:
        return 1.0 / (1.0 - self.rho)


@dataclass(frozen=True)
class FblResult:
    """Finite-blocklength TV bound and the privacy level it certifies."""
    n: int
    rate_R: float
    rho_star: float
    exponent: float
    branch: str
    delta_cap_n: float
    delta_n: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
