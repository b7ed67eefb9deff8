"""Finite-blocklength achievable privacy for likelihood-encoder synthesis."""
from .alpha_mi import alpha_mi_discrete, alpha_mi_gaussian
from .exponent import achieved_delta, blocklength_curve, delta_n_bound, exponent_objective, rho_star
from .models import FblConfig, FblResult, RhoStar
from .sources import DiscreteSource, GaussianSource, InfoDensitySource

__all__ = [
    "alpha_mi_discrete",
    "alpha_mi_gaussian",
    "achieved_delta",
    "blocklength_curve",
    "delta_n_bound",
    "exponent_objective",
    "rho_star",
    "FblConfig",
    "FblResult",
    "RhoStar",
    "DiscreteSource",
    "GaussianSource",
    "InfoDensitySource",
]
