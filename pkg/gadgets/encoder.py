"""
PPA Reductions Toolkit - Circuit Encoder
The boolean circuit each encoder runs: sensor bits -> piece counts -> (tau; alpha) in fixed point ->
cubelet of B -> oracle colour -> f' outputs, one tap pair per coordinate.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from config import get_logger
from gadgets.arithmetic import (
    Word,
    add,
    bit_width,
    constant_word,
    fixed_constant,
    fixed_divide,
    fixed_multiply,
    mux_word,
    popcount,
    ratio_to_fixed,
    signed_greater,
    subtract,
    unsigned_less,
    zero_extend,
)
from mobius.colouring import BlanketState, EncoderSample
from mobius.params import ReductionParams
from numerics.circuits import BooleanCircuit, CircuitBuilder
from numerics.errors import CircuitError, InstanceError
from numerics.nvhdt import CUBELETS_PER_AXIS, NVHDTInstance

logger = get_logger('Encoder')


@dataclass(frozen=True)
class EncoderCircuit:
    """
    Inputs: p_huge sensor bits, then (active toward A+, active toward A-) for blanket sensors 2..n.
    Outputs: g'_1, g'_-1, ..., g'_n, g'_-n. Coordinate j of f' is +1 when both of its outputs are
    TRUE, -1 when both are FALSE and 0 otherwise.
    """
    circuit: BooleanCircuit
    n: int
    num_sensors: int
    frac_bits: int

    def inputs_for(self, bits: Sequence[bool], blanket: Sequence[BlanketState]) -> Tuple[bool, ...]:
        if len(bits) != self.num_sensors or len(blanket) != self.n - 1:
            raise InstanceError(f"encoder takes {self.num_sensors} sensor bits and {self.n - 1} blanket states")
        wires = [bool(b) for b in bits]
        for state in blanket:
            wires.append(state is BlanketState.PLUS)
            wires.append(state is BlanketState.MINUS)
        return tuple(wires)

    def evaluate(self, bits: Sequence[bool], blanket: Sequence[BlanketState]) -> Tuple[bool, ...]:
        return self.circuit.evaluate(self.inputs_for(bits, blanket))

    def evaluate_sample(self, sample: EncoderSample) -> Tuple[bool, ...]:
        return self.evaluate(sample.bits, sample.blanket)

    def feedback_vector(self, outputs: Sequence[bool]) -> Tuple[int, ...]:
        if len(outputs) != 2 * self.n:
            raise CircuitError(f"expected {2 * self.n} encoder outputs, got {len(outputs)}")
        return tuple(outputs_to_entry(outputs[2 * k], outputs[2 * k + 1]) for k in range(self.n))

    def to_dict(self):
        return {
            'n': self.n,
            'num_sensors': self.num_sensors,
            'frac_bits': self.frac_bits,
            'circuit': self.circuit.to_dict(),
        }


# ============================================
# OUTPUT TRANSFORM
# ============================================

def output_gate_transform(g_pos: bool, g_neg: bool, reference: bool) -> Tuple[bool, bool]:
    """
    (g_j, g_-j, reference bit) -> (g'_j, g'_-j). The colour entry is negated when the reference
    sensor reads A-.
    """
    if g_pos and g_neg:
        raise CircuitError("an encoder cannot output colour j and -j at once")
    any_ = g_pos or g_neg
    both = (g_pos and not reference) or (g_neg and reference)
    return (not any_) or both, any_ and both


def outputs_to_entry(g_pos: bool, g_neg: bool) -> int:
    if g_pos and g_neg:
        return 1
    if not g_pos and not g_neg:
        return -1
    return 0


def entry_to_outputs(entry: int) -> Tuple[bool, bool]:
    if entry not in (-1, 0, 1):
        raise InstanceError(f"feedback entry must lie in {{-1, 0, 1}}: {entry}")
    return entry >= 0, entry > 0


# ============================================
# CIRCUIT STAGES
# ============================================

def _piece_counts(b: CircuitBuilder, bits: Sequence[int], n: int) -> List[Word]:
    """N_0..N_n: sensors per piece, counting only the first n label flips."""
    register = [b.true] + [b.false] * n
    members: List[List[int]] = [[] for _ in range(n + 1)]
    previous = b.false
    for bit in bits:
        flip = b.xor(bit, previous)
        previous = bit
        stay = b.not_(flip)
        shifted = [b.and_(register[0], stay)]
        for m in range(1, n):
            shifted.append(b.or_(b.and_(register[m], stay), b.and_(register[m - 1], flip)))
        shifted.append(b.or_(register[n], b.and_(register[n - 1], flip)))
        register = shifted
        for m in range(n + 1):
            members[m].append(register[m])
    return [popcount(b, column) for column in members]


def _transformed_words(b: CircuitBuilder, counts: List[Word], total: int, n: int,
                       frac_bits: int, width: int) -> Tuple[Word, List[Word]]:
    """
    (tau; alpha_2..alpha_n) in fixed point. tau is the x_1 / (x_1 + x_{n+1}) ratio; the point is
    reversed first when that keeps tau >= 1/2, so the recursion only ever divides by tau.
    """
    count_width = bit_width(total)
    counts = [zero_extend(b, c, count_width) for c in counts]
    reverse = unsigned_less(b, counts[0], counts[n])
    work = [mux_word(b, reverse, counts[n - m], counts[m]) for m in range(n + 1)]

    ends = add(b, zero_extend(b, work[0], count_width + 1), zero_extend(b, work[n], count_width + 1))
    tau = ratio_to_fixed(b, work[0], ends, frac_bits, width)
    one = fixed_constant(b, Fraction(1), frac_bits, width)
    one_minus_tau, _ = subtract(b, one, tau)
    inverse_n = fixed_constant(b, Fraction(1, n), frac_bits, width)
    total_word = constant_word(b, total, count_width + 1)

    alphas = [fixed_constant(b, Fraction(0), frac_bits, width)]
    prefix = zero_extend(b, work[0], count_width)
    for k in range(1, n):
        share = ratio_to_fixed(b, prefix, total_word, frac_bits, width)
        base = fixed_multiply(b, add(b, fixed_constant(b, Fraction(k - 1), frac_bits, width), tau),
                              inverse_n, frac_bits)
        carried = fixed_multiply(b, one_minus_tau, alphas[-1], frac_bits)
        numerator, _ = subtract(b, add(b, base, carried), share)
        alphas.append(fixed_divide(b, numerator, tau, frac_bits))
        prefix = add(b, prefix, work[k])
    alphas = alphas[1:]

    tau = mux_word(b, reverse, one_minus_tau, tau)
    alphas = [mux_word(b, reverse, alphas[n - 2 - k], alphas[k]) for k in range(n - 1)]
    return tau, alphas


def _cubelet_bits(b: CircuitBuilder, value: Word, offset: Fraction, scale: Fraction,
                  frac_bits: int, width: int) -> List[int]:
    """3-bit 0-based cubelet index of (value - offset) / scale, faces going to the smaller index."""
    over = []
    for m in range(1, CUBELETS_PER_AXIS):
        theta = Fraction(-1) + Fraction(2 * m, CUBELETS_PER_AXIS)
        over.append(signed_greater(b, value, fixed_constant(b, offset + scale * theta, frac_bits, width)))
    t1, t2, t3, t4, t5, t6 = over
    bit2 = t4
    bit1 = b.or_(b.and_(t2, b.not_(t4)), t6)
    bit0 = b.or_all([b.and_(t1, b.not_(t2)), b.and_(t3, b.not_(t4)), b.and_(t5, b.not_(t6))])
    return [bit0, bit1, bit2]


def build_encoder_circuit(inst: NVHDTInstance, params: ReductionParams) -> EncoderCircuit:
    n = params.n
    if inst.dimension != n:
        raise InstanceError(f"instance has dimension {inst.dimension}, params have {n}")
    frac_bits = params.frac_bits
    width = frac_bits + bit_width(4 * n) + 1
    total = params.p_huge
    b = CircuitBuilder()
    sensors = b.inputs(total)
    blanket = [(b.input(), b.input()) for _ in range(2, n + 1)]

    counts = _piece_counts(b, sensors, n)
    tau, alphas = _transformed_words(b, counts, total, n, frac_bits, width)

    half = Fraction(1, 2)
    cube_bits = _cubelet_bits(b, tau, half, params.delta_t, frac_bits, width)
    for alpha in alphas:
        cube_bits.extend(_cubelet_bits(b, alpha, Fraction(0), params.delta_t, frac_bits, width))
    oracle = b.splice(inst.circuit(), cube_bits)

    upper = fixed_constant(b, params.delta_t, frac_bits, width)
    lower = fixed_constant(b, -params.delta_t, frac_bits, width)
    above = [signed_greater(b, alpha, upper) for alpha in alphas]
    below = [signed_greater(b, lower, alpha) for alpha in alphas]
    tunnel = b.not_(b.or_all(above + below))

    reference = sensors[0]
    outputs = []
    for j in range(1, n + 1):
        if j == 1:
            g_pos = b.and_(tunnel, oracle[0])
            g_neg = b.and_(tunnel, oracle[n])
        else:
            g_pos = b.mux(tunnel, oracle[j - 1], below[j - 2])
            g_neg = b.mux(tunnel, oracle[n + j - 1], above[j - 2])
            act_plus, act_minus = blanket[j - 2]
            force_pos, force_neg = (act_plus, act_minus) if j % 2 == 1 else (act_minus, act_plus)
            free = b.and_(b.not_(act_plus), b.not_(act_minus))
            keep_ref = b.not_(reference)
            g_pos, g_neg = (
                b.or_all([b.and_(force_pos, keep_ref), b.and_(force_neg, reference), b.and_(free, g_pos)]),
                b.or_all([b.and_(force_neg, keep_ref), b.and_(force_pos, reference), b.and_(free, g_neg)]),
            )
        any_ = b.or_(g_pos, g_neg)
        both = b.or_(b.and_(g_pos, b.not_(reference)), b.and_(g_neg, reference))
        outputs.append(b.or_(b.not_(any_), both))
        outputs.append(b.and_(any_, both))

    circuit = b.build(outputs)
    logger.info(f"encoder circuit for n={n}: {len(circuit.gates)} gates, {circuit.num_inputs} inputs")
    return EncoderCircuit(circuit=circuit, n=n, num_sensors=total, frac_bits=frac_bits)
