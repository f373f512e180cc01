from fractions import Fraction

from ._core import (
    Slope,
    SturmianNumber,
    boehmer,
    decode_integer,
    degenerate_expansions,
    encode_integer,
    encode_real,
    extremal_intercept,
)

__all__ = [
    "Slope",
    "SturmianNumber",
    "boehmer",
    "decode_integer",
    "degenerate_expansions",
    "encode_integer",
    "encode_real",
    "extremal_intercept",
    "estimate",
]


def estimate(number, K):
    """Finite-horizon exponent estimate with exact Fractions."""
    raw = number.estimate(K)
    return {
        "mu": Fraction(*raw["mu"]),
        "mu_full": Fraction(*raw["mu_full"]),
        "window": raw["window"],
    }
