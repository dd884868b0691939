"""Parsing and serialization of numbers in spec documents and reports."""
import math
import re
from fractions import Fraction
from typing import Any
from typing import Union

import numpy as np

from core import AlgebraSpecError
from core import InexactBlockData

RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")
SQRT = re.compile(r"^\s*(-?)\s*sqrt\(\s*(\d+)\s*(?:/\s*(\d+))?\s*\)\s*$")

Number = Union[int, float, Fraction]


def parse_number(value: Any) -> Number:
    """Document entry -> int, Fraction or float.

    Accepts JSON numbers, exact rationals "p/q" and signed square roots of
    rationals "sqrt(p/q)" / "-sqrt(p/q)" (returned as float).
    """
    if isinstance(value, bool):
        raise AlgebraSpecError(f"booleans are not numbers: {value!r}")
    if isinstance(value, (int, Fraction)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        match = RATIONAL.match(value)
        if match:
            num, den = match.groups()
            if den is not None and int(den) == 0:
                raise AlgebraSpecError(f"zero denominator in {value!r}")
            return Fraction(int(num), int(den or 1))
        match = SQRT.match(value)
        if match:
            sign, num, den = match.groups()
            if den is not None and int(den) == 0:
                raise AlgebraSpecError(f"zero denominator in {value!r}")
            root = math.sqrt(Fraction(int(num), int(den or 1)))
            return -root if sign else root
    raise AlgebraSpecError(f"cannot parse number {value!r}")


def is_exact(value: Number) -> bool:
    return isinstance(value, (int, Fraction))


def rational_string(value: Union[int, Fraction]) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def float_string(value: float) -> str:
    return format(float(value), ".17g")


def to_jsonable(obj: Any) -> Any:
    """Recursively convert reports to JSON values: rationals as "p/q", floats at 17 digits"""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return rational_string(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        if math.isfinite(value):
            # round-trips through json as the same double
            return float(float_string(value))
        return float_string(value)
    if isinstance(obj, np.ndarray):
        return [to_jsonable(x) for x in obj.tolist()]
    if isinstance(obj, dict):
        return {str(key): to_jsonable(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def recognize_rational(value: float, max_denominator: int = 10 ** 6, tol: float = 1e-9) -> Fraction:
    """Nearest rational with bounded denominator; raises when it is not within tol"""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    guess = Fraction(float(value)).limit_denominator(max_denominator)
    if abs(float(guess) - float(value)) > tol * max(1.0, abs(float(value))):
        raise InexactBlockData(f"{value!r} is not a rational with denominator <= {max_denominator}")
    return guess
