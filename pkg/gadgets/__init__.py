"""
PPA Reductions Toolkit - Consensus-Halving Gadgets Package
Gate and sensor gadgets, the circuit encoder, the NVHDT -> CH reduction and its way back.
"""

from mobius.colouring import BlanketState, blanket_active

from .blocks import (
    BlockKind,
    GateKind,
    GadgetBlock,
    Wire,
    GadgetRun,
    agent_measure,
    build_gate_gadget,
    run_gate_gadget,
)
from .sensors import build_sensor_agent, build_blanket_sensor
from .encoder import EncoderCircuit, build_encoder_circuit, output_gate_transform
from .reduction import (
    SlotRole,
    SlotPlan,
    EncoderLayout,
    FeedbackSpec,
    Reduction,
    compile_slot_plan,
    build_reduction,
)
from .simulate import simulate_cuts
from .extract import ExtractionResult, extract_solution

__all__ = [
    'BlanketState',
    'blanket_active',
    'BlockKind',
    'GateKind',
    'GadgetBlock',
    'Wire',
    'GadgetRun',
    'agent_measure',
    'build_gate_gadget',
    'run_gate_gadget',
    'build_sensor_agent',
    'build_blanket_sensor',
    'EncoderCircuit',
    'build_encoder_circuit',
    'output_gate_transform',
    'SlotRole',
    'SlotPlan',
    'EncoderLayout',
    'FeedbackSpec',
    'Reduction',
    'compile_slot_plan',
    'build_reduction',
    'simulate_cuts',
    'ExtractionResult',
    'extract_solution',
]
