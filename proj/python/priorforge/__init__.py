"""Exact common-prior and no-trade analysis of finite information structures.

Every probability and payoff returned by this package is a fractions.Fraction.
Inputs may be ints, Fractions or strings such as "1/3"; floats are rejected.
"""

from ._core import (
    InputError,
    Structure,
    VerificationError,
    __version__,
    all_components,
    classify_distribution,
    classify_prior,
    classify_trade,
    cross_check,
    find_money_pump,
    find_prior,
    find_trade,
    minimal_components,
    random_structure,
    report,
)

__all__ = [
    "InputError",
    "Structure",
    "VerificationError",
    "__version__",
    "all_components",
    "classify_distribution",
    "classify_prior",
    "classify_trade",
    "cross_check",
    "find_money_pump",
    "find_prior",
    "find_trade",
    "load",
    "minimal_components",
    "random_structure",
    "report",
]


def load(path):
    """Reads a structure document from a file."""
    return Structure.load(str(path))
