from fractions import Fraction
from typing import Tuple

from ..core.configs import settings


def parse_min_support(text: str) -> Tuple[float, bool]:
    """
    Parse a threshold flag: `20` is an absolute count, `10%` a relative one.

    Returns (value, relative) with relative values as fractions in (0, 1].
    """
    raw = text.strip()
    relative = raw.endswith("%")
    number = raw[:-1].strip() if relative else raw
    try:
        exact = Fraction(number)
    except ValueError:
        raise ValueError(f"min-support must be a number or a percentage, got {text!r}")
    if relative:
        exact /= 100
    return float(exact), relative


def relative_threshold(fraction: float, num_vertices: int) -> float:
    """
    θ = fraction·|V| computed on the decimal the fraction was written as,
    so 29% of 100 is exactly 29 and not 28.999999999999996.
    """
    return float(Fraction(repr(fraction)) * num_vertices)


def round_real(value: float, digits: int | None = None) -> float:
    """Round to a fixed number of significant digits so printed output is byte-stable."""
    digits = digits or settings.REAL_SIGNIFICANT_DIGITS
    return float(format(value, f".{digits}g"))
