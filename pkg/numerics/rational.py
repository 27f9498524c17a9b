"""
PPA Reductions Toolkit - Exact Rationals
Strict conversion to Fraction and the "p/q" string form used on the wire.
"""

import math
import operator
import re
from fractions import Fraction
from typing import Any, Union

from numerics.errors import InstanceError

Rational = Fraction
RationalLike = Union[int, str, Fraction]

RATIONAL_PATTERN = r'^-?\d+(/\d+)?$'
_RATIONAL_RE = re.compile(RATIONAL_PATTERN)


def as_rational(value: Any, name: str = 'value') -> Fraction:
    """Convert int/Fraction/"p/q" to Fraction. Floats are rejected."""
    if isinstance(value, bool):
        raise InstanceError(f"{name} must be rational, got bool")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value, name)
    if isinstance(value, float):
        raise InstanceError(f"{name} must be rational (int/Fraction/str); float is forbidden: {value!r}")
    raise InstanceError(f"{name} must be int/Fraction/str, got {type(value).__name__}")


def parse_rational(text: str, name: str = 'value') -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise InstanceError(f"{name}: '{text}' is not of the form p or p/q")
    if '/' in text and int(text.split('/')[1]) == 0:
        raise InstanceError(f"{name}: zero denominator in '{text}'")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


_OPS = {
    '+': operator.add,
    '-': operator.sub,
    '*': operator.mul,
    '/': operator.truediv,
}


def rational_arith(a: RationalLike, b: RationalLike, op: str):
    """
    Exact binary operation on rationals.
    `op` is one of + - * / cmp; cmp returns -1, 0 or 1.
    """
    a = as_rational(a, 'a')
    b = as_rational(b, 'b')
    if op == 'cmp':
        return (a > b) - (a < b)
    if op not in _OPS:
        raise InstanceError(f"unknown operation '{op}'")
    if op == '/' and b == 0:
        raise ZeroDivisionError('rational division by zero')
    return _OPS[op](a, b)


def floor_rational(x: Fraction) -> int:
    return x.numerator // x.denominator


def ceil_rational(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def lcm_of_denominators(values) -> int:
    result = 1
    for v in values:
        result = math.lcm(result, Fraction(v).denominator)
    return result
