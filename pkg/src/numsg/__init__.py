"""Exhaustive enumeration of numerical semigroups and checks of their counting laws."""

__version__ = "0.1.0"

from .core import NATURALS, InvariantProfile, Semigroup, build, from_mask, is_med, min_generators, profile
from .enumeration import (
    Budget,
    FrobeniusCensus,
    GenusCensus,
    enumerate_by_frobenius,
    enumerate_by_genus,
    iter_by_frobenius,
    iter_by_genus,
)
from .errors import (
    BudgetExceeded,
    FrobeniusViolated,
    FTooSmall,
    InvalidPair,
    InvalidSemigroup,
    NotClosed,
    NotDepth3,
    NumsgError,
    OutOfBudget,
)

__all__ = [
    "NATURALS",
    "Budget",
    "BudgetExceeded",
    "FTooSmall",
    "FrobeniusCensus",
    "FrobeniusViolated",
    "GenusCensus",
    "InvalidPair",
    "InvalidSemigroup",
    "InvariantProfile",
    "NotClosed",
    "NotDepth3",
    "NumsgError",
    "OutOfBudget",
    "Semigroup",
    "build",
    "enumerate_by_frobenius",
    "enumerate_by_genus",
    "from_mask",
    "is_med",
    "iter_by_frobenius",
    "iter_by_genus",
    "min_generators",
    "profile",
]
