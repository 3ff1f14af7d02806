"""
Exact rational scalars.

Every distance, constant and bound in the lab is a ``fractions.Fraction``;
floats only appear when a report is rendered for humans.
"""
import re
from enum import Enum
from fractions import Fraction
from typing import Annotated, Union

from pydantic import PlainSerializer, PlainValidator, WithJsonSchema

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

_SCALAR_RE = re.compile(r'^[+-]?\d+(/\d+|\.\d+)?$')


class Ordering(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def compare(a: Scalar, b: Scalar) -> Ordering:
    # cross-multiplication, denominators are positive
    left = a.numerator * b.denominator
    right = b.numerator * a.denominator
    if left < right:
        return Ordering.LESS
    if left > right:
        return Ordering.GREATER
    return Ordering.EQUAL


def lt_sqrt(a: Scalar, u: Scalar) -> bool:
    """Решает a < √u точно, без извлечения корня"""
    if u < 0:
        raise ValueError(f"no real square root of {format_scalar(u)}")
    if a < 0:
        return True
    return a * a < u


def parse_scalar(value: Union[str, int, Fraction]) -> Scalar:
    """Принимает "p/q", "p" или конечную десятичную запись"""
    if isinstance(value, bool):
        raise ValueError(f"not a scalar: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"scalars are written as 'p/q' text, got {type(value).__name__}")
    text = value.strip()
    if not _SCALAR_RE.match(text):
        raise ValueError(f"not a scalar: {value!r}")
    if '/' in text and int(text.split('/')[1]) == 0:
        raise ValueError(f"zero denominator in {value!r}")
    return Fraction(text)


def format_scalar(value: Scalar) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def approx(value: Scalar, digits: int = 6) -> str:
    return f"≈{float(value):.{digits}g}"


ScalarField = Annotated[
    Fraction,
    PlainValidator(parse_scalar),
    PlainSerializer(format_scalar, return_type=str),
    WithJsonSchema({"type": "string", "pattern": _SCALAR_RE.pattern}),
]
