"""Data models for finite-alphabet joint distributions."""
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..common.errors import DomainError

_SUM_TOL = 1e-12


@dataclass(frozen=True)
class JointPmf:
    """A k x k joint probability matrix Q[x~, y].

    Rectangular inputs are padded with zero rows or columns, which leaves
    every quantity computed here (entropies, maxtrace, the WCI bound)
    unchanged.
    """
    q: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        q = np.array(self.q, dtype=float)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise DomainError(f"joint pmf must be a square matrix, got shape {q.shape}")
        if q.shape[0] < 2:
            raise DomainError("joint pmf needs an alphabet of at least 2 symbols")
        if np.any(q < 0) or not np.all(np.isfinite(q)):
            raise DomainError("joint pmf entries must be finite and non-negative")
        total = q.sum()
        if abs(total - 1.0) > _SUM_TOL:
            raise DomainError(f"joint pmf must sum to 1, got {total!r}")
        q.setflags(write=False)
        object.__setattr__(self, "q", q)

    @property
    def k(self) -> int:
        return self.q.shape[0]

    @property
    def p_x(self) -> np.ndarray:
        """Row marginal P_X~."""
        return self.q.sum(axis=1)

    @property
    def p_y(self) -> np.ndarray:
        """Column marginal P_Y."""
        return self.q.sum(axis=0)

    @classmethod
    def from_matrix(cls, q: Any, normalize: bool = False) -> "JointPmf":
        """Build from any 2-D array, padding to square.

        Args:
            q: Matrix of non-negative weights.
            normalize: Divide by the total first (for rounded inputs).
        """
        q = np.array(q, dtype=float)
        if q.ndim != 2:
            raise DomainError(f"joint pmf must be 2-D, got {q.ndim} dimensions")
        k = max(q.shape)
        padded = np.zeros((k, k))
        padded[: q.shape[0], : q.shape[1]] = q
        if normalize:
            padded = padded / padded.sum()
        return cls(padded)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "JointPmf":
        """Parse the ``{"k": int, "q": row-major k*k list}`` form."""
        doc = JointPmfDocument.model_validate(data)
        return cls(np.array(doc.q, dtype=float).reshape(doc.k, doc.k))

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "q": self.q.ravel().tolist()}


class JointPmfDocument(BaseModel):
    """Serialised joint pmf."""
    k: int = Field(ge=2)
    q: list[float]

    @model_validator(mode="after")
    def _check_size(self) -> "JointPmfDocument":
        if len(self.q) != self.k * self.k:
            raise ValueError(f"q must hold k*k={self.k * self.k} entries, got {len(self.q)}")
        return self


class BscMixtureParams(BaseModel):
    """Parameters of the two-sided BSC mixture driven by a uniform bit W.

    Y side: weight c on the subchannel with crossover p2, 1 - c on the one
    with crossover p4. X~ side: weight d with p1, 1 - d with p3.
    """
    model_config = ConfigDict(frozen=True)

    p1: float = Field(ge=0, le=1)
    p2: float = Field(ge=0, le=1)
    p3: float = Field(ge=0, le=1)
    p4: float = Field(ge=0, le=1)
    c: float = Field(ge=0, le=1)
    d: float = Field(ge=0, le=1)

    def as_tuple(self) -> Tuple[float, ...]:
        return (self.p1, self.p2, self.p3, self.p4, self.c, self.d)


@dataclass(frozen=True)
class WitsenhausenResult:
    """Witsenhausen-type lower bound on C(X~;Y).

    Attributes:
        h_joint: H(X~,Y) in nats.
        maxtr: Maxitrace of the joint matrix, in [1/k, 1].
        perm: Permutation attaining the maxitrace (0-based column per row).
        f_value: f(maxtr) in nats.
        branch: "f1" or "f2".
        wci_lower: max(0, wci_raw).
        wci_raw: h_joint - f_value, unclamped.
    """
    h_joint: float
    maxtr: float
    perm: Tuple[int, ...]
    f_value: float
    branch: str
    wci_lower: float
    wci_raw: float


@dataclass(frozen=True)
class RateChain:
    """I <= C <= min{H(X~), H(Y)} evaluated for one joint pmf (nats)."""
    h_x: float
    h_y: float
    h_joint: float
    mutual_info: float
    wci_lower: float
    cond_entropy_y_given_x: float

    @property
    def ceiling(self) -> float:
        """Lossless-transmission rate min{H(X~), H(Y)}."""
        return min(self.h_x, self.h_y)


@dataclass(frozen=True)
class RrSweepRow:
    """One random BSC-mixture draw."""
    index: int
    params: BscMixtureParams
    chain: RateChain

    @property
    def flagged(self) -> bool:
        return self.chain.wci_lower > self.chain.mutual_info
