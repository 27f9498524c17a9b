"""
PPA Reductions Toolkit - Gadget Blocks
Uniform value-blocks, unit slot geometry, gate gadgets and the stand-alone gate harness.
"""

from collections import OrderedDict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from numerics.errors import InstanceError
from numerics.measures import CHInstance, Label, LabelledCutSet, StepMeasure
from numerics.rational import as_rational, format_rational
from oracles.verifiers import balancing_cut

Interval = Tuple[Fraction, Fraction]

F = Fraction


class BlockKind(str, Enum):
    THIN_DENSE = 'thin_dense'
    CENTRAL = 'central'
    FEEDBACK = 'feedback'
    SENSOR = 'sensor'
    PARITY = 'parity'


class GateKind(str, Enum):
    NOT = 'NOT'
    OR = 'OR'
    AND = 'AND'


@dataclass(frozen=True)
class GadgetBlock:
    a: Fraction
    b: Fraction
    mass: Fraction
    kind: BlockKind

    def __post_init__(self):
        if self.mass <= 0:
            raise InstanceError("block mass must be positive")
        if not self.a < self.b:
            raise InstanceError(f"empty block [{self.a}, {self.b}]")

    def to_dict(self):
        return {
            'interval': [format_rational(self.a), format_rational(self.b)],
            'mass': format_rational(self.mass),
            'kind': self.kind.value,
        }


# ============================================
# SLOT GEOMETRY
# ============================================

# Offsets inside a unit slot [s, s+1].
LEFT_OUT = (F(1, 8), F(1, 4))
RIGHT_OUT = (F(3, 4), F(7, 8))
TAP = (F(7, 16), F(9, 16))
CENTRE = (F(3, 8), F(5, 8))

BLANKET_LEFT = (F(1, 16), F(3, 16))
BLANKET_TAP_A = (F(1, 4), F(5, 16))
BLANKET_MIDDLE = (F(3, 8), F(5, 8))
BLANKET_TAP_B = (F(11, 16), F(3, 4))
BLANKET_RIGHT = (F(13, 16), F(15, 16))

# (input mass per input, left output mass, right output mass)
GATE_MASSES = {
    GateKind.NOT: (F(1, 4), F(3, 8), F(3, 8)),
    GateKind.OR: (F(1, 8), F(5, 16), F(7, 16)),
    GateKind.AND: (F(1, 8), F(7, 16), F(5, 16)),
}


def at(slot: Fraction, offsets: Tuple[Fraction, Fraction]) -> Interval:
    return slot + offsets[0], slot + offsets[1]


def tap(slot: Fraction) -> Interval:
    return at(slot, TAP)


@dataclass(frozen=True)
class Wire:
    """A tap interval plus polarity: the wire is TRUE iff (tap reads A+) xor polarity."""
    tap: Interval
    polarity: bool = False

    def negated(self) -> 'Wire':
        return Wire(self.tap, not self.polarity)

    def value(self, cuts: LabelledCutSet) -> bool:
        return (cuts.label_at(self.tap[0]) is Label.PLUS) != self.polarity

    def to_dict(self):
        return {
            'tap': [format_rational(self.tap[0]), format_rational(self.tap[1])],
            'polarity': self.polarity,
        }


def agent_measure(blocks: Iterable[GadgetBlock], length) -> StepMeasure:
    """Measure of one agent; blocks sharing an interval are merged."""
    merged: Dict[Interval, Fraction] = OrderedDict()
    for block in blocks:
        key = (block.a, block.b)
        merged[key] = merged.get(key, Fraction(0)) + block.mass
    return StepMeasure.from_blocks([(a, b, m) for (a, b), m in merged.items()], length)


# ============================================
# GATE GADGETS
# ============================================

def _check_unit_intervals(intervals: Sequence[Interval]) -> None:
    for a, b in intervals:
        if b - a != 1:
            raise InstanceError(f"gadget interval [{a}, {b}] is not unit length")
    ordered = sorted(intervals)
    for (a1, b1), (a2, _) in zip(ordered, ordered[1:]):
        if a2 < b1:
            raise InstanceError("gadget intervals overlap")


def build_gate_gadget(kind: GateKind, in_intervals: Sequence[Interval],
                      out_interval: Interval) -> List[GadgetBlock]:
    """
    Input blocks on the taps of the input intervals, two output blocks in the output interval.
    NOT: 1/4 in, 3/8 + 3/8 out. OR: 1/8 + 1/8 in, 5/16 + 7/16 out. AND: 1/8 + 1/8 in, 7/16 + 5/16 out.
    """
    kind = GateKind(kind)
    arity = 1 if kind is GateKind.NOT else 2
    in_intervals = [(as_rational(a), as_rational(b)) for a, b in in_intervals]
    out_interval = (as_rational(out_interval[0]), as_rational(out_interval[1]))
    if len(in_intervals) != arity:
        raise InstanceError(f"{kind.value} gadget takes {arity} input interval(s)")
    _check_unit_intervals(list(in_intervals) + [out_interval])
    return gate_blocks(kind, [tap(a) for a, _ in in_intervals], out_interval[0])


def gate_blocks(kind: GateKind, input_taps: Sequence[Interval], slot: Fraction) -> List[GadgetBlock]:
    """Gadget blocks for a gate whose inputs sit on arbitrary taps; taps may repeat."""
    in_mass, left_mass, right_mass = GATE_MASSES[kind]
    blocks = [GadgetBlock(a, b, in_mass, BlockKind.CENTRAL) for a, b in input_taps]
    blocks.append(GadgetBlock(*at(slot, LEFT_OUT), left_mass, BlockKind.THIN_DENSE))
    blocks.append(GadgetBlock(*at(slot, RIGHT_OUT), right_mass, BlockKind.THIN_DENSE))
    return blocks


def parity_blocks(slot: Fraction) -> List[GadgetBlock]:
    """Mass 1 in the middle of the slot; the cut sits at its centre."""
    return [GadgetBlock(*at(slot, CENTRE), Fraction(1), BlockKind.PARITY)]


# ============================================
# STAND-ALONE HARNESS
# ============================================

@dataclass
class GadgetRun:
    kind: GateKind
    inputs: Tuple[bool, ...]
    instance: CHInstance
    cuts: LabelledCutSet
    output_cut: Fraction
    output: bool


def _driver(slot: Fraction, offsets: Tuple[Fraction, Fraction]) -> List[GadgetBlock]:
    return [GadgetBlock(*at(slot, offsets), Fraction(1), BlockKind.THIN_DENSE)]


def run_gate_gadget(kind: GateKind, inputs: Sequence[bool]) -> GadgetRun:
    """
    One gate between driver agents that pin its inputs.
    Unit intervals alternate input, spacer, input, ..., output, so every input cut and the NOT
    output cut have A+ on their left while OR/AND output cuts have A- on their left.
    A NOT value is TRUE when its cut sits left; OR/AND values are TRUE when their cut sits right.
    """
    kind = GateKind(kind)
    inputs = tuple(bool(v) for v in inputs)
    arity = 1 if kind is GateKind.NOT else 2
    if len(inputs) != arity:
        raise InstanceError(f"{kind.value} gadget takes {arity} input(s)")
    true_left = kind is GateKind.NOT
    agents: List[List[GadgetBlock]] = []
    windows: List[Interval] = []
    slot = Fraction(0)
    in_intervals = []
    for k, value in enumerate(inputs):
        left = value == true_left
        agents.append(_driver(slot, LEFT_OUT if left else RIGHT_OUT))
        in_intervals.append((slot, slot + 1))
        slot += 1
        agents.append(_driver(slot, CENTRE))
        slot += 1
    if kind is not GateKind.NOT:
        # OR/AND outputs need A- on their left: one spacer fewer.
        agents.pop()
        slot -= 1
    out_interval = (slot, slot + 1)
    length = slot + 1
    gate = build_gate_gadget(kind, in_intervals, out_interval)
    measures = [agent_measure(blocks, length) for blocks in agents]
    cuts = []
    for blocks in agents:
        cuts.append(blocks[0].a + (blocks[0].b - blocks[0].a) / 2)
    gate_measure = agent_measure(gate, length)
    output_cut = balancing_cut(gate_measure, cuts, out_interval[0], out_interval[1])
    if output_cut is None:
        raise InstanceError(f"{kind.value} gadget has no balancing cut for inputs {inputs}")
    instance = CHInstance(length, tuple(measures) + (gate_measure,), Fraction(0), 0)
    cut_set = LabelledCutSet.of(cuts + [output_cut])
    left = output_cut < out_interval[0] + Fraction(1, 2)
    return GadgetRun(kind, inputs, instance, cut_set, output_cut, left == true_left)
