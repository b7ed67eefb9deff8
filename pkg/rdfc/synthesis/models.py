"""Data models for strong-coordination synthesis experiments."""
import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

_STOCHASTIC_TOL = 1e-12


def _check_distribution(name: str, row: List[float]) -> None:
    if any(p < 0 for p in row):
        raise ValueError(f"{name} has negative entries: {row}")
    if abs(math.fsum(row) - 1.0) > _STOCHASTIC_TOL:
        raise ValueError(f"{name} must sum to 1, got {math.fsum(row)!r}")


class CoordinationScheme(BaseModel):
    """A decomposition P_U P_{X~|U} P_{Y|U} of a target joint.

    X~ and Y are conditionally independent given U; the induced target is
    Q(x, y) = sum_u P_U(u) P(x|u) P(y|u).
    """
    model_config = ConfigDict(frozen=True)

    p_u: List[float] = Field(min_length=1)
    p_x_given_u: List[List[float]]
    p_y_given_u: List[List[float]]

    @model_validator(mode="after")
    def _check_stochastic(self) -> "CoordinationScheme":
        _check_distribution("p_u", self.p_u)
        for name in ("p_x_given_u", "p_y_given_u"):
            matrix = getattr(self, name)
            if len(matrix) != len(self.p_u):
                raise ValueError(f"{name} needs one row per value of U ({len(self.p_u)}), got {len(matrix)}")
            if len({len(row) for row in matrix}) != 1 or not matrix[0]:
                raise ValueError(f"{name} rows must be non-empty and of equal length")
            for u, row in enumerate(matrix):
                _check_distribution(f"{name}[{u}]", row)
        return self

    @property
    def u_size(self) -> int:
        return len(self.p_u)

    @property
    def x_size(self) -> int:
        return len(self.p_x_given_u[0])

    @property
    def y_size(self) -> int:
        return len(self.p_y_given_u[0])

    @property
    def pu(self) -> np.ndarray:
        return np.asarray(self.p_u, dtype=float)

    @property
    def px_u(self) -> np.ndarray:
        return np.asarray(self.p_x_given_u, dtype=float)

    @property
    def py_u(self) -> np.ndarray:
        return np.asarray(self.p_y_given_u, dtype=float)

    @property
    def p_x(self) -> np.ndarray:
        """Marginal of X~ induced by the scheme."""
        return self.pu @ self.px_u

    def target(self) -> np.ndarray:
        """Q[x~, y] induced by the scheme (|X~| x |Y|)."""
        return np.einsum("u,ux,uy->xy", self.pu, self.px_u, self.py_u)


class SynthesisConfig(BaseModel):
    """One synthesis experiment: a scheme, a blocklength and a rate pair in nats."""
    model_config = ConfigDict(frozen=True)

    scheme: CoordinationScheme
    n: int = Field(ge=1)
    rate_R: float = Field(ge=0)
    rate_R0: float = Field(default=0.0, ge=0)
    trials: int = Field(default=20, ge=1)
    seed: int = 0

    @property
    def codebook_sizes(self) -> Tuple[int, int]:
        """(M, M0) = (ceil(e^{nR}), ceil(e^{nR0}))."""
        return codebook_size(self.n, self.rate_R), codebook_size(self.n, self.rate_R0)


def codebook_size(n: int, rate: float) -> int:
    # the tolerance keeps exact powers such as e^{n ln 2} from rounding up
    return max(1, math.ceil(math.exp(n * rate) * (1.0 - 1e-12)))


@dataclass(frozen=True)
class SynthesisOutcome:
    """Exact TV distances over independent codebooks.

    Attributes:
        tv_per_trial: ||P_{X~^n Y^n} - Q^n||_TV per trial.
        single_letter_tv: TV of the (x~_1, y_1) marginal pair per trial.
        marginal_error: Largest deviation of the induced X~^n marginal from
            P_X~^n over all trials.
    """
    n: int
    rate_R: float
    rate_R0: float
    codebook_sizes: Tuple[int, int]
    tv_per_trial: Tuple[float, ...]
    single_letter_tv: Tuple[float, ...]
    marginal_error: float

    @property
    def median_tv(self) -> float:
        return float(np.median(self.tv_per_trial))

    @property
    def mean_tv(self) -> float:
        return float(np.mean(self.tv_per_trial))

    def rows(self) -> List[Dict[str, Any]]:
        return [
            {"trial": trial, "n": self.n, "R": self.rate_R, "R0": self.rate_R0, "tv": tv}
            for trial, tv in enumerate(self.tv_per_trial)
        ]

    def save_csv(self, output_path: Union[str, Path]) -> None:
        """Write (trial, n, R, R0, tv) rows with a header."""
        with open(output_path, "w", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=["trial", "n", "R", "R0", "tv"])
            writer.writeheader()
            for row in self.rows():
                writer.writerow({k: (f"{v:.10g}" if isinstance(v, float) else v) for k, v in row.items()})
