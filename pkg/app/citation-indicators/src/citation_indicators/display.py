import math
from fractions import Fraction

from citation_indicators.core import InvalidFractionError


def as_fraction(value: Fraction | int | str | float) -> Fraction:
    """Converts user input to an exact fraction; floats go through their shortest decimal form, so 0.1 is 1/10."""
    if isinstance(value, float):
        value = repr(value)
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidFractionError(f"Not a fraction: {value!r}") from e


def format_fraction(value: Fraction | int, digits: int = 1) -> str:
    """Rounds half away from zero on the exact value; 81.25 displays as 81.3 and 1.25 as 1.3."""
    if digits < 0:
        raise ValueError(f"digits must be non-negative, got {digits}")
    value = Fraction(value)
    rounded = math.floor(abs(value) * 10**digits + Fraction(1, 2))
    text = str(rounded).rjust(digits + 1, "0")
    if digits:
        text = f"{text[:-digits]}.{text[-digits:]}"
    return f"-{text}" if value < 0 and rounded else text
