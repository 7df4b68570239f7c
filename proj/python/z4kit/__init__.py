"""Type II Z4-codes: verification, doubling and candidate filtering."""

from ._z4kit import (
    Code,
    Error,
    GuardError,
    ParseError,
    PreconditionError,
    builtin_names,
    check_candidate,
    design,
    double,
    from_generators,
    lattice_stats,
    load,
    macwilliams,
    min_euclidean_weight,
    parse,
    random_search,
    verify_extremal,
    weight_distribution,
)

__all__ = [
    "Code",
    "Error",
    "GuardError",
    "ParseError",
    "PreconditionError",
    "builtin_names",
    "check_candidate",
    "design",
    "double",
    "from_generators",
    "lattice_stats",
    "load",
    "macwilliams",
    "min_euclidean_weight",
    "parse",
    "random_search",
    "verify_extremal",
    "weight_distribution",
]
