"""Conversion between bits and nats at the command-line boundary."""
import math
from typing import Literal

Units = Literal["nats", "bits"]

UNITS = ("nats", "bits")


def _factor(units: str) -> float:
    if units not in UNITS:
        raise ValueError(f"units must be one of {UNITS}, got {units!r}")
    return math.log(2.0) if units == "bits" else 1.0


def to_nats(value: float, units: str) -> float:
    return value * _factor(units)


def from_nats(value: float, units: str) -> float:
    return value / _factor(units)
