"""Truncated q-series arithmetic and machine checks of parity congruences
between hauptmoduln and mock theta functions."""

__version__ = "0.1.0"

from .series import (  # noqa: E402
    LaurentSeries,
    NotInvertibleError,
    PrecisionError,
    add,
    coeff,
    compare,
    extract_progression,
    inv,
    monomial,
    mul,
    power,
    reduce_mod,
    substitute_power,
)
from .catalog import SeriesCache, build  # noqa: E402
from .claims import Claim, CoefficientStream, VerificationReport, verify_claim  # noqa: E402
from .registry import builtin_claims  # noqa: E402

__all__ = [
    "LaurentSeries", "NotInvertibleError", "PrecisionError",
    "add", "coeff", "compare", "extract_progression", "inv", "monomial", "mul", "power",
    "reduce_mod", "substitute_power",
    "SeriesCache", "build",
    "Claim", "CoefficientStream", "VerificationReport", "verify_claim",
    "builtin_claims",
]
