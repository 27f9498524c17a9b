"""
PPA Reductions Toolkit - Circuit Arithmetic
Binary words on a CircuitBuilder: ripple adders, comparators, popcount, shift-add multiplication,
restoring division and signed fixed-point helpers. Words are LSB first; signed words are two's
complement.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from numerics.circuits import CircuitBuilder
from numerics.errors import CircuitError
from numerics.rational import floor_rational

Word = List[int]


# ============================================
# CONSTANTS AND WIDTHS
# ============================================

def constant_word(b: CircuitBuilder, value: int, width: int) -> Word:
    """value mod 2^width."""
    return [b.const(bool((value >> k) & 1)) for k in range(width)]


def fixed_constant(b: CircuitBuilder, value: Fraction, frac_bits: int, width: int) -> Word:
    """floor(value * 2^frac_bits) as a signed word."""
    raw = floor_rational(Fraction(value) * 2 ** frac_bits)
    if not -(1 << (width - 1)) <= raw < 1 << (width - 1):
        raise CircuitError(f"constant {value} does not fit a {width}-bit fixed-point word")
    return constant_word(b, raw, width)


def zero_extend(b: CircuitBuilder, x: Sequence[int], width: int) -> Word:
    return list(x[:width]) + [b.false] * (width - len(x))


def sign_extend(b: CircuitBuilder, x: Sequence[int], width: int) -> Word:
    return list(x[:width]) + [x[-1]] * (width - len(x))


def bit_width(value: int) -> int:
    return max(1, value.bit_length())


# ============================================
# ADDERS AND COMPARATORS
# ============================================

def full_adder(b: CircuitBuilder, x: int, y: int, carry: int) -> Tuple[int, int]:
    half = b.xor(x, y)
    return b.xor(half, carry), b.or_(b.and_(x, y), b.and_(half, carry))


def add_with_carry(b: CircuitBuilder, x: Sequence[int], y: Sequence[int], carry: int) -> Tuple[Word, int]:
    if len(x) != len(y):
        raise CircuitError("adder operands must have equal widths")
    out = []
    for xi, yi in zip(x, y):
        s, carry = full_adder(b, xi, yi, carry)
        out.append(s)
    return out, carry


def add(b: CircuitBuilder, x: Sequence[int], y: Sequence[int]) -> Word:
    return add_with_carry(b, x, y, b.false)[0]


def subtract(b: CircuitBuilder, x: Sequence[int], y: Sequence[int]) -> Tuple[Word, int]:
    """(x - y mod 2^w, no-borrow); no-borrow is x >= y for unsigned words."""
    return add_with_carry(b, x, [b.not_(w) for w in y], b.true)


def negate(b: CircuitBuilder, x: Sequence[int]) -> Word:
    return add_with_carry(b, [b.not_(w) for w in x], [b.false] * len(x), b.true)[0]


def mux_word(b: CircuitBuilder, select: int, when_true: Sequence[int], when_false: Sequence[int]) -> Word:
    return [b.mux(select, t, f) for t, f in zip(when_true, when_false)]


def unsigned_less(b: CircuitBuilder, x: Sequence[int], y: Sequence[int]) -> int:
    width = max(len(x), len(y))
    _, no_borrow = subtract(b, zero_extend(b, x, width), zero_extend(b, y, width))
    return b.not_(no_borrow)


def signed_greater(b: CircuitBuilder, x: Sequence[int], y: Sequence[int]) -> int:
    """x > y for signed words."""
    width = max(len(x), len(y)) + 1
    diff, _ = subtract(b, sign_extend(b, y, width), sign_extend(b, x, width))
    return diff[-1]


def popcount(b: CircuitBuilder, bits: Sequence[int]) -> Word:
    words = [[w] for w in bits] or [[b.false]]
    while len(words) > 1:
        paired = []
        for k in range(0, len(words) - 1, 2):
            width = max(len(words[k]), len(words[k + 1]))
            total, carry = add_with_carry(b, zero_extend(b, words[k], width),
                                          zero_extend(b, words[k + 1], width), b.false)
            paired.append(total + [carry])
        if len(words) % 2:
            paired.append(words[-1])
        words = paired
    return words[0]


# ============================================
# MULTIPLICATION AND DIVISION
# ============================================

def multiply_unsigned(b: CircuitBuilder, x: Sequence[int], y: Sequence[int]) -> Word:
    width = len(x) + len(y)
    acc = [b.false] * width
    for k, yk in enumerate(y):
        if b.constant_value(yk) is False:
            continue
        partial = [b.false] * k + [b.and_(xi, yk) for xi in x]
        acc = add(b, acc, zero_extend(b, partial, width))
    return acc


def divide_unsigned(b: CircuitBuilder, dividend: Sequence[int], divisor: Sequence[int]) -> Word:
    """Restoring division; the quotient has the dividend's width. Division by zero yields all ones."""
    width = len(divisor) + 1
    divisor = zero_extend(b, divisor, width)
    remainder = [b.false] * width
    quotient = []
    for bit in reversed(dividend):
        remainder = [bit] + remainder[:-1]
        diff, fits = subtract(b, remainder, divisor)
        remainder = mux_word(b, fits, diff, remainder)
        quotient.append(fits)
    return list(reversed(quotient))


def ratio_to_fixed(b: CircuitBuilder, numerator: Sequence[int], denominator: Sequence[int],
                   frac_bits: int, width: int) -> Word:
    """floor(numerator * 2^frac_bits / denominator) for unsigned integers, as a `width`-bit word."""
    shifted = [b.false] * frac_bits + list(numerator)
    return zero_extend(b, divide_unsigned(b, shifted, denominator), width)


def magnitude(b: CircuitBuilder, x: Sequence[int]) -> Tuple[Word, int]:
    sign = x[-1]
    return mux_word(b, sign, negate(b, x), x), sign


def fixed_multiply(b: CircuitBuilder, x: Sequence[int], y: Sequence[int], frac_bits: int) -> Word:
    """Signed fixed-point product, truncated toward zero."""
    width = len(x)
    mx, sx = magnitude(b, x)
    my, sy = magnitude(b, y)
    product = multiply_unsigned(b, mx, my)[frac_bits:frac_bits + width]
    return mux_word(b, b.xor(sx, sy), negate(b, product), product)


def fixed_divide(b: CircuitBuilder, x: Sequence[int], y: Sequence[int], frac_bits: int) -> Word:
    """Signed x over positive y, truncated toward zero."""
    width = len(x)
    mx, sx = magnitude(b, x)
    quotient = divide_unsigned(b, [b.false] * frac_bits + mx, y)[:width]
    return mux_word(b, sx, negate(b, quotient), quotient)
