"""
PPA Reductions Toolkit - Numerics Package
Exact rationals, measures, instance types, boolean circuits and cubelet Tucker instances.
"""

from .errors import (
    ReductionToolkitError,
    InstanceError,
    DomainError,
    SearchBoundError,
    OracleBugError,
    ParameterError,
    PullBackError,
    ExtractionError,
    CircuitError,
)
from .rational import Rational, as_rational, parse_rational, format_rational, rational_arith
from .measures import Label, StepMeasure, LabelledCutSet, CHInstance, measure_integral
from .instances import (
    NecklaceInstance,
    NecklaceSplit,
    HamSandwichInstance,
    Hyperplane,
    TuckerGrid2D,
    TuckerGridND,
)
from .circuits import GateOp, Gate, BooleanCircuit, CircuitBuilder
from .nvhdt import NVHDTInstance, ExplicitColourTable, CircuitColourOracle, compile_table_circuit

__all__ = [
    'ReductionToolkitError',
    'InstanceError',
    'DomainError',
    'SearchBoundError',
    'OracleBugError',
    'ParameterError',
    'PullBackError',
    'ExtractionError',
    'CircuitError',
    'Rational',
    'as_rational',
    'parse_rational',
    'format_rational',
    'rational_arith',
    'Label',
    'StepMeasure',
    'LabelledCutSet',
    'CHInstance',
    'measure_integral',
    'NecklaceInstance',
    'NecklaceSplit',
    'HamSandwichInstance',
    'Hyperplane',
    'TuckerGrid2D',
    'TuckerGridND',
    'GateOp',
    'Gate',
    'BooleanCircuit',
    'CircuitBuilder',
    'NVHDTInstance',
    'ExplicitColourTable',
    'CircuitColourOracle',
    'compile_table_circuit',
]
