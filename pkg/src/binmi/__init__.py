"""Interval estimation for a binomial success rate with missing outcomes."""

from .dist import RngStream
from .intervals import IntervalEstimate, clopper_pearson, one_sided_lower
from .methods import (
    MethodId,
    NoObservedData,
    PriorSpec,
    RunConfig,
    TrialData,
    estimate,
)

__version__ = "0.1.0"

__all__ = [
    "IntervalEstimate",
    "MethodId",
    "NoObservedData",
    "PriorSpec",
    "RngStream",
    "RunConfig",
    "TrialData",
    "clopper_pearson",
    "estimate",
    "one_sided_lower",
]
