"""
PPA Reductions Toolkit - NVHDT -> Consensus-Halving Reduction
Lays out the coordinate-encoding agents and p_c circuit encoders, one unit slot per gadget agent.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from config import get_logger
from gadgets.blocks import (
    BLANKET_TAP_A,
    BLANKET_TAP_B,
    LEFT_OUT,
    TAP,
    BlockKind,
    GadgetBlock,
    GateKind,
    Interval,
    Wire,
    agent_measure,
    at,
    gate_blocks,
    parity_blocks,
)
from gadgets.encoder import EncoderCircuit, build_encoder_circuit
from gadgets.sensors import blanket_blocks, sensor_blocks
from mobius.params import ReductionParams
from numerics.circuits import GateOp
from numerics.errors import CircuitError, InstanceError
from numerics.measures import CHInstance
from numerics.nvhdt import NVHDTInstance
from numerics.rational import format_rational

logger = get_logger('Reduction')

Offsets = Tuple[Fraction, Fraction]


class SlotRole(str, Enum):
    SENSOR = 'sensor'
    BLANKET = 'blanket'
    PARITY = 'parity'
    GATE = 'gate'
    PAD = 'pad'


@dataclass(frozen=True)
class LocalWire:
    """A wire inside one encoder: slot index relative to the encoder start, tap offsets, polarity."""
    slot: int
    offsets: Offsets
    polarity: bool = False

    def negated(self) -> 'LocalWire':
        return LocalWire(self.slot, self.offsets, not self.polarity)

    def placed(self, start: Fraction) -> Wire:
        return Wire(at(start + self.slot, self.offsets), self.polarity)


@dataclass(frozen=True)
class SlotAgent:
    """One gadget agent of an encoder; `index` is the sensor or blanket index where relevant."""
    role: SlotRole
    index: int = 0
    gate: Optional[GateKind] = None
    inputs: Tuple[Tuple[int, Offsets], ...] = ()

    def label(self, encoder: int, slot: int) -> str:
        if self.role == SlotRole.SENSOR:
            return f"C{encoder}.s{self.index}"
        if self.role == SlotRole.BLANKET:
            return f"C{encoder}.b{self.index}"
        if self.role == SlotRole.GATE:
            return f"C{encoder}.g{slot}"
        return f"C{encoder}.{self.role.value}"


@dataclass(frozen=True)
class SlotPlan:
    """Slot-by-slot layout shared by every encoder; slot k starts with A+ iff n + k is even."""
    agents: Tuple[SlotAgent, ...]
    outputs: Tuple[LocalWire, ...]
    parity_slot: int

    @property
    def size(self) -> int:
        return len(self.agents)

    def gate_count(self) -> int:
        return sum(1 for a in self.agents if a.role == SlotRole.GATE)


@dataclass(frozen=True)
class EncoderLayout:
    encoder: int
    start: Fraction
    slots: int
    parity_plus: bool
    shift: Fraction
    outputs: Tuple[Wire, ...]

    @property
    def region(self) -> Interval:
        return self.start, self.start + self.slots

    def to_dict(self):
        return {
            'encoder': self.encoder,
            'region': [format_rational(self.start), format_rational(self.start + self.slots)],
            'parity_plus': self.parity_plus,
            'shift': format_rational(self.shift),
            'outputs': [w.to_dict() for w in self.outputs],
        }


@dataclass(frozen=True)
class FeedbackSpec:
    """Value-blocks of c-e agent a_j in encoder C_i, at the taps of g'_j and g'_-j."""
    j: int
    encoder: int
    positive: Interval
    negative: Interval
    mass: Fraction

    def blocks(self) -> List[GadgetBlock]:
        return [
            GadgetBlock(*self.positive, self.mass, BlockKind.FEEDBACK),
            GadgetBlock(*self.negative, self.mass, BlockKind.FEEDBACK),
        ]

    def to_dict(self):
        return {
            'j': self.j,
            'encoder': self.encoder,
            'positive': [format_rational(x) for x in self.positive],
            'negative': [format_rational(x) for x in self.negative],
            'mass': format_rational(self.mass),
        }


@dataclass
class Reduction:
    inst: NVHDTInstance
    params: ReductionParams
    ch: CHInstance
    encoder: EncoderCircuit
    plan: SlotPlan
    layouts: List[EncoderLayout]
    feedback: List[FeedbackSpec]
    agent_slots: List[Optional[Interval]] = field(default_factory=list)

    @property
    def slots_per_encoder(self) -> int:
        return self.plan.size

    def encoder_of_position(self, x: Fraction) -> Optional[int]:
        """Encoder whose region contains x, or None inside the c-e region."""
        n = self.params.n
        if x < n:
            return None
        i = int((x - n) // self.plan.size) + 1
        return min(i, self.params.p_c)

    def to_dict(self):
        return {
            'params': self.params.to_dict(),
            'num_agents': self.ch.num_agents,
            'length': format_rational(self.ch.length),
            'slots_per_encoder': self.plan.size,
            'gates_per_encoder': self.plan.gate_count(),
            'layouts': [layout.to_dict() for layout in self.layouts],
            'feedback': [spec.to_dict() for spec in self.feedback],
        }


# ============================================
# COMPILING THE ENCODER
# ============================================

def slot_starts_plus(n: int, slot: int) -> bool:
    """Each earlier slot and each c-e region cut contributes one cut; encoders have an even slot count."""
    return (n + slot) % 2 == 0


def compile_slot_plan(encoder: EncoderCircuit) -> SlotPlan:
    """
    Places sensors, blanket sensors and a parity slot, then one gadget per AND/OR gate in
    topological order. NOT gates only flip wire polarity; inputs of mixed polarity get a NOT
    converter first. Outputs end with polarity FALSE so each output tap reads A+ iff it is TRUE.
    """
    n = encoder.n
    circuit = encoder.circuit
    agents: List[SlotAgent] = []
    wires: Dict[int, LocalWire] = {}

    def convert(wire: LocalWire) -> LocalWire:
        slot = len(agents)
        agents.append(SlotAgent(SlotRole.GATE, gate=GateKind.NOT, inputs=((wire.slot, wire.offsets),)))
        return LocalWire(slot, TAP, not wire.polarity)

    inputs = circuit.input_gates
    if len(inputs) != encoder.num_sensors + 2 * (n - 1):
        raise CircuitError("encoder inputs do not match its sensors")
    for j in range(1, encoder.num_sensors + 1):
        # The tap reads A+ exactly when the c-e block lies in an A- piece, at any slot parity.
        wires[inputs[j - 1]] = LocalWire(len(agents), TAP)
        agents.append(SlotAgent(SlotRole.SENSOR, index=j))
    for j in range(2, n + 1):
        slot = len(agents)
        tap_a = LocalWire(slot, BLANKET_TAP_A)
        tap_b = LocalWire(slot, BLANKET_TAP_B)
        # A large A+ excess moves the detector cut into the left block when the slot starts with A+
        # and into the right block when it starts with A-.
        if slot_starts_plus(n, slot):
            act_plus, act_minus = tap_a.negated(), tap_b
        else:
            act_plus, act_minus = tap_b.negated(), tap_a
        offset = encoder.num_sensors + 2 * (j - 2)
        wires[inputs[offset]] = act_plus
        wires[inputs[offset + 1]] = act_minus
        agents.append(SlotAgent(SlotRole.BLANKET, index=j))

    parity_slot = len(agents)
    parity_plus = slot_starts_plus(n, parity_slot)
    agents.append(SlotAgent(SlotRole.PARITY))

    for idx, gate in enumerate(circuit.gates):
        if gate.op is GateOp.INPUT:
            continue
        if gate.op is GateOp.CONST:
            wires[idx] = LocalWire(parity_slot, LEFT_OUT, gate.value != parity_plus)
        elif gate.op is GateOp.NOT:
            wires[idx] = wires[gate.inputs[0]].negated()
        else:
            first, second = (wires[w] for w in gate.inputs)
            if first.polarity != second.polarity:
                second = convert(second)
            polarity = first.polarity
            # AND of plain taps and OR of negated taps are NANDs of the taps.
            nand = (gate.op is GateOp.AND) != polarity
            slot = len(agents)
            if slot_starts_plus(n, slot):
                kind = GateKind.OR if nand else GateKind.AND
            else:
                kind = GateKind.AND if nand else GateKind.OR
            agents.append(SlotAgent(SlotRole.GATE, gate=kind,
                                    inputs=((first.slot, first.offsets), (second.slot, second.offsets))))
            wires[idx] = LocalWire(slot, TAP, not polarity)

    outputs = []
    for w in circuit.outputs:
        wire = wires[w]
        outputs.append(convert(wire) if wire.polarity else wire)
    if len(agents) % 2:
        agents.append(SlotAgent(SlotRole.PAD))
    return SlotPlan(tuple(agents), tuple(outputs), parity_slot)


# ============================================
# BUILDING THE INSTANCE
# ============================================

def _slot_blocks(agent: SlotAgent, encoder: int, slot: Fraction, start: Fraction,
                 params: ReductionParams) -> List[GadgetBlock]:
    if agent.role == SlotRole.SENSOR:
        return sensor_blocks(encoder, agent.index, params, slot)
    if agent.role == SlotRole.BLANKET:
        return blanket_blocks(encoder, agent.index, params, slot)
    if agent.role in (SlotRole.PARITY, SlotRole.PAD):
        return parity_blocks(slot)
    taps = [at(start + s, offsets) for s, offsets in agent.inputs]
    return gate_blocks(agent.gate, taps, slot)


def build_reduction(inst: NVHDTInstance, params: ReductionParams,
                    encoder: Optional[EncoderCircuit] = None) -> Reduction:
    """
    CHInstance on [0, n + p_c K]: c-e agents a_1..a_n first, then the K slot agents of each
    encoder in slot order. `encoder` replaces the compiled encoder circuit when given.
    """
    n = params.n
    if inst.dimension != n:
        raise InstanceError(f"instance has dimension {inst.dimension}, params have {n}")
    if encoder is None:
        encoder = build_encoder_circuit(inst, params)
    if encoder.n != n or encoder.num_sensors != params.p_huge:
        raise CircuitError("encoder circuit does not match the reduction parameters")
    plan = compile_slot_plan(encoder)
    size = plan.size
    length = Fraction(n + params.p_c * size)
    logger.info(f"{params.p_c} encoders x {size} slots ({plan.gate_count()} gate agents each), domain [0, {length}]")

    layouts: List[EncoderLayout] = []
    feedback: List[FeedbackSpec] = []
    feedback_mass = Fraction(1, 2 * params.p_c)
    gadget_measures = []
    names: List[str] = []
    agent_slots: List[Optional[Interval]] = [None] * n
    for i in range(1, params.p_c + 1):
        start = Fraction(n + (i - 1) * size)
        outputs = tuple(w.placed(start) for w in plan.outputs)
        layouts.append(EncoderLayout(
            encoder=i,
            start=start,
            slots=size,
            parity_plus=slot_starts_plus(n, 0),
            shift=params.shift(i),
            outputs=outputs,
        ))
        for j in range(1, n + 1):
            feedback.append(FeedbackSpec(j, i, outputs[2 * j - 2].tap, outputs[2 * j - 1].tap, feedback_mass))
        for k, agent in enumerate(plan.agents):
            slot = start + k
            gadget_measures.append(agent_measure(_slot_blocks(agent, i, slot, start, params), length))
            names.append(agent.label(i, k))
            agent_slots.append((slot, slot + 1))
        logger.debug(f"encoder {i} placed on [{start}, {start + size}]")

    ce_measures = []
    for j in range(1, n + 1):
        blocks = [b for spec in feedback if spec.j == j for b in spec.blocks()]
        ce_measures.append(agent_measure(blocks, length))

    ch = CHInstance(
        length=length,
        agents=tuple(ce_measures) + tuple(gadget_measures),
        epsilon=params.epsilon,
        ce_region_length=n,
        agent_names=tuple(f"a{j}" for j in range(1, n + 1)) + tuple(names),
    )
    logger.info(f"built CH instance with {ch.num_agents} agents")
    return Reduction(inst, params, ch, encoder, plan, layouts, feedback, agent_slots)

