"""Symmetric random-response scenario over finite alphabets."""
from .audit import channel, ldp_audit
from .chain import rate_chain, rr_sweep
from .entropy import (
    binary_entropy,
    conditional_entropy,
    joint_entropy,
    marginal_entropies,
    mutual_information_discrete,
)
from .maxtrace import maxtrace
from .mixture import CANDIDATES, CANONICAL, MixtureMapping, bsc_mixture, disambiguate_mapping
from .models import BscMixtureParams, JointPmf, RateChain, RrSweepRow, WitsenhausenResult
from .witsenhausen import crossover_point, wci_lower_bound_discrete, witsenhausen_f

__all__ = [
    "channel",
    "ldp_audit",
    "rate_chain",
    "rr_sweep",
    "binary_entropy",
    "conditional_entropy",
    "joint_entropy",
    "marginal_entropies",
    "mutual_information_discrete",
    "maxtrace",
    "CANDIDATES",
    "CANONICAL",
    "MixtureMapping",
    "bsc_mixture",
    "disambiguate_mapping",
    "BscMixtureParams",
    "JointPmf",
    "RateChain",
    "RrSweepRow",
    "WitsenhausenResult",
    "crossover_point",
    "wci_lower_bound_discrete",
    "witsenhausen_f",
]
