"""
PPA Reductions Toolkit - Boolean Circuits
Gate-list circuits, their evaluation, and an incremental builder with folding and hashing.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from numerics.errors import CircuitError


class GateOp(str, Enum):
    INPUT = 'INPUT'
    CONST = 'CONST'
    NOT = 'NOT'
    AND = 'AND'
    OR = 'OR'


_ARITY = {GateOp.INPUT: 0, GateOp.CONST: 0, GateOp.NOT: 1, GateOp.AND: 2, GateOp.OR: 2}


@dataclass(frozen=True)
class Gate:
    op: GateOp
    inputs: Tuple[int, ...] = ()
    value: bool = False  # CONST only

    def to_dict(self):
        data = {'op': self.op.value, 'inputs': list(self.inputs)}
        if self.op is GateOp.CONST:
            data['value'] = self.value
        return data


@dataclass(frozen=True)
class BooleanCircuit:
    """Topologically ordered gates; INPUT gates are numbered in order of appearance."""
    gates: Tuple[Gate, ...]
    outputs: Tuple[int, ...]

    def __post_init__(self):
        for idx, gate in enumerate(self.gates):
            if len(gate.inputs) != _ARITY[gate.op]:
                raise CircuitError(f"gate {idx} ({gate.op.value}) has {len(gate.inputs)} inputs")
            for w in gate.inputs:
                if not 0 <= w < idx:
                    raise CircuitError(f"gate {idx} references wire {w}, which is not an earlier gate")
        for w in self.outputs:
            if not 0 <= w < len(self.gates):
                raise CircuitError(f"output wire {w} does not exist")

    @property
    def input_gates(self) -> List[int]:
        return [i for i, g in enumerate(self.gates) if g.op is GateOp.INPUT]

    @property
    def num_inputs(self) -> int:
        return len(self.input_gates)

    def count(self, *ops: GateOp) -> int:
        return sum(1 for g in self.gates if g.op in ops)

    def evaluate_wires(self, inputs: Sequence[bool]) -> List[bool]:
        if len(inputs) != self.num_inputs:
            raise CircuitError(f"expected {self.num_inputs} inputs, got {len(inputs)}")
        values: List[bool] = []
        feed = iter(inputs)
        for gate in self.gates:
            op = gate.op
            if op is GateOp.INPUT:
                values.append(bool(next(feed)))
            elif op is GateOp.CONST:
                values.append(gate.value)
            elif op is GateOp.NOT:
                values.append(not values[gate.inputs[0]])
            elif op is GateOp.AND:
                values.append(values[gate.inputs[0]] and values[gate.inputs[1]])
            else:
                values.append(values[gate.inputs[0]] or values[gate.inputs[1]])
        return values

    def evaluate(self, inputs: Sequence[bool]) -> Tuple[bool, ...]:
        values = self.evaluate_wires(inputs)
        return tuple(values[w] for w in self.outputs)

    def evaluate_many(self, inputs: np.ndarray) -> np.ndarray:
        """Vectorised evaluation: rows are input assignments, columns are outputs."""
        inputs = np.asarray(inputs, dtype=bool)
        if inputs.ndim != 2 or inputs.shape[1] != self.num_inputs:
            raise CircuitError(f"expected an array of shape (k, {self.num_inputs})")
        values: List[np.ndarray] = []
        column = 0
        for gate in self.gates:
            op = gate.op
            if op is GateOp.INPUT:
                values.append(inputs[:, column])
                column += 1
            elif op is GateOp.CONST:
                values.append(np.full(inputs.shape[0], gate.value))
            elif op is GateOp.NOT:
                values.append(~values[gate.inputs[0]])
            elif op is GateOp.AND:
                values.append(values[gate.inputs[0]] & values[gate.inputs[1]])
            else:
                values.append(values[gate.inputs[0]] | values[gate.inputs[1]])
        if not self.outputs:
            return np.zeros((inputs.shape[0], 0), dtype=bool)
        return np.stack([values[w] for w in self.outputs], axis=1)

    def to_dict(self):
        return {'gates': [g.to_dict() for g in self.gates], 'outputs': list(self.outputs)}


# ============================================
# BUILDER
# ============================================

class CircuitBuilder:
    """
    Builds circuits gate by gate.
    Constants fold away, double negations cancel and structurally equal gates are shared.
    """

    def __init__(self):
        self.gates: List[Gate] = []
        self._hash: Dict[Tuple, int] = {}
        self._negation: Dict[int, int] = {}
        self._const: Dict[int, bool] = {}
        self.false = self._add(Gate(GateOp.CONST, (), False))
        self.true = self._add(Gate(GateOp.CONST, (), True))
        self._negation[self.false] = self.true
        self._negation[self.true] = self.false

    def _add(self, gate: Gate) -> int:
        key = (gate.op, gate.inputs, gate.value)
        if gate.op is not GateOp.INPUT and key in self._hash:
            return self._hash[key]
        self.gates.append(gate)
        idx = len(self.gates) - 1
        if gate.op is GateOp.CONST:
            self._const[idx] = gate.value
        if gate.op is not GateOp.INPUT:
            self._hash[key] = idx
        return idx

    def const(self, value: bool) -> int:
        return self.true if value else self.false

    def constant_value(self, wire: int) -> Optional[bool]:
        return self._const.get(wire)

    def input(self) -> int:
        return self._add(Gate(GateOp.INPUT))

    def inputs(self, count: int) -> List[int]:
        return [self.input() for _ in range(count)]

    def not_(self, a: int) -> int:
        if a in self._negation:
            return self._negation[a]
        out = self._add(Gate(GateOp.NOT, (a,)))
        self._negation[a] = out
        self._negation[out] = a
        return out

    def and_(self, a: int, b: int) -> int:
        ca, cb = self._const.get(a), self._const.get(b)
        if ca is False or cb is False:
            return self.false
        if ca is True:
            return b
        if cb is True or a == b:
            return a
        if self._negation.get(a) == b:
            return self.false
        return self._add(Gate(GateOp.AND, (min(a, b), max(a, b))))

    def or_(self, a: int, b: int) -> int:
        ca, cb = self._const.get(a), self._const.get(b)
        if ca is True or cb is True:
            return self.true
        if ca is False:
            return b
        if cb is False or a == b:
            return a
        if self._negation.get(a) == b:
            return self.true
        return self._add(Gate(GateOp.OR, (min(a, b), max(a, b))))

    def xor(self, a: int, b: int) -> int:
        return self.or_(self.and_(a, self.not_(b)), self.and_(self.not_(a), b))

    def mux(self, select: int, when_true: int, when_false: int) -> int:
        return self.or_(self.and_(select, when_true), self.and_(self.not_(select), when_false))

    def and_all(self, wires: Iterable[int]) -> int:
        return self._reduce(list(wires), self.and_, self.true)

    def or_all(self, wires: Iterable[int]) -> int:
        return self._reduce(list(wires), self.or_, self.false)

    def _reduce(self, wires: List[int], op, empty: int) -> int:
        if not wires:
            return empty
        while len(wires) > 1:
            paired = [op(wires[k], wires[k + 1]) for k in range(0, len(wires) - 1, 2)]
            if len(wires) % 2:
                paired.append(wires[-1])
            wires = paired
        return wires[0]

    def splice(self, circuit: BooleanCircuit, input_wires: Sequence[int]) -> List[int]:
        """Inline `circuit`, feeding its inputs from `input_wires`; returns its output wires."""
        if len(input_wires) != circuit.num_inputs:
            raise CircuitError(f"splice needs {circuit.num_inputs} input wires")
        mapping: List[int] = []
        feed = iter(input_wires)
        for gate in circuit.gates:
            if gate.op is GateOp.INPUT:
                mapping.append(next(feed))
            elif gate.op is GateOp.CONST:
                mapping.append(self.const(gate.value))
            elif gate.op is GateOp.NOT:
                mapping.append(self.not_(mapping[gate.inputs[0]]))
            elif gate.op is GateOp.AND:
                mapping.append(self.and_(mapping[gate.inputs[0]], mapping[gate.inputs[1]]))
            else:
                mapping.append(self.or_(mapping[gate.inputs[0]], mapping[gate.inputs[1]]))
        return [mapping[w] for w in circuit.outputs]

    def build(self, outputs: Sequence[int], prune: bool = True) -> BooleanCircuit:
        """Freeze into a BooleanCircuit; unreachable non-input gates are dropped when pruning."""
        if not prune:
            return BooleanCircuit(tuple(self.gates), tuple(outputs))
        live = [False] * len(self.gates)
        for w in outputs:
            live[w] = True
        for idx in range(len(self.gates) - 1, -1, -1):
            if live[idx]:
                for w in self.gates[idx].inputs:
                    live[w] = True
        remap: Dict[int, int] = {}
        kept: List[Gate] = []
        for idx, gate in enumerate(self.gates):
            if live[idx] or gate.op is GateOp.INPUT:
                remap[idx] = len(kept)
                kept.append(Gate(gate.op, tuple(remap[w] for w in gate.inputs), gate.value))
        return BooleanCircuit(tuple(kept), tuple(remap[w] for w in outputs))
