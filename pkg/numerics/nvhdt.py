"""
PPA Reductions Toolkit - Cubelet Tucker Instances
Colourings of B = [-1, 1]^n by 7^n cubelets, backed by an explicit table or a circuit.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Protocol, Sequence, Tuple

import numpy as np

from numerics.circuits import BooleanCircuit, CircuitBuilder
from numerics.errors import CircuitError, DomainError, InstanceError
from numerics.instances import antipodal_violations
from numerics.rational import as_rational, ceil_rational

CUBELETS_PER_AXIS = 7
BITS_PER_AXIS = 3

Cubelet = Tuple[int, ...]


def quantize_coordinate(x) -> int:
    """1-based cubelet index along one axis; faces go to the smaller index."""
    x = as_rational(x, 'coordinate')
    if not -1 <= x <= 1:
        raise DomainError(f"coordinate {x} outside [-1, 1]")
    return max(1, ceil_rational((x + 1) * Fraction(CUBELETS_PER_AXIS, 2)))


def cubelet_of(point: Sequence) -> Cubelet:
    return tuple(quantize_coordinate(x) for x in point)


def mirror_cubelet(cubelet: Cubelet) -> Cubelet:
    return tuple(CUBELETS_PER_AXIS + 1 - c for c in cubelet)


def symmetric_cubelet_of(point: Sequence) -> Cubelet:
    """
    cubelet_of with faces resolved so that -x always lands in the mirror of x's cubelet.
    Points whose first nonzero coordinate is positive are quantized through their negation.
    Off the faces this agrees with cubelet_of.
    """
    point = tuple(as_rational(x, 'coordinate') for x in point)
    if next((x for x in point if x != 0), 0) > 0:
        return mirror_cubelet(cubelet_of(tuple(-x for x in point)))
    return cubelet_of(point)


def cubelet_centre(cubelet: Cubelet) -> Tuple[Fraction, ...]:
    return tuple(Fraction(2 * c - 1, CUBELETS_PER_AXIS) - 1 for c in cubelet)


def encode_cubelet(cubelet: Cubelet) -> Tuple[bool, ...]:
    """Input bits for a circuit oracle: 0-based index per axis, LSB first."""
    bits = []
    for c in cubelet:
        bits.extend(bool(((c - 1) >> b) & 1) for b in range(BITS_PER_AXIS))
    return tuple(bits)


def output_order(n: int) -> Tuple[int, ...]:
    """Colour carried by each circuit output: +1..+n then -1..-n."""
    return tuple(range(1, n + 1)) + tuple(-c for c in range(1, n + 1))


def default_facet_colours(n: int) -> Tuple[Tuple[int, int], ...]:
    """Axis a has colour -(a+1) on its min facet and +(a+1) on its max facet; axis 0 is panchromatic."""
    return tuple((-(a + 1), a + 1) for a in range(n))


# ============================================
# COLOUR ORACLES
# ============================================

class ColourOracle(Protocol):
    dimension: int

    def colour(self, cubelet: Cubelet) -> int:
        ...


@dataclass(frozen=True)
class ExplicitColourTable:
    """table[c_1 - 1, ..., c_n - 1] is the colour of cubelet (c_1, ..., c_n)."""
    table: np.ndarray

    def __post_init__(self):
        arr = np.array(self.table, dtype=np.int8)
        arr.setflags(write=False)
        object.__setattr__(self, 'table', arr)
        if arr.shape != (CUBELETS_PER_AXIS,) * arr.ndim:
            raise InstanceError("colour table must be 7 x ... x 7")
        if not np.isin(np.abs(arr), np.arange(1, arr.ndim + 1)).all():
            raise InstanceError(f"colours must lie in +-[{arr.ndim}]")

    @property
    def dimension(self) -> int:
        return self.table.ndim

    def colour(self, cubelet: Cubelet) -> int:
        return int(self.table[tuple(c - 1 for c in cubelet)])


@dataclass(frozen=True)
class CircuitColourOracle:
    circuit: BooleanCircuit
    dimension: int

    def __post_init__(self):
        if self.circuit.num_inputs != BITS_PER_AXIS * self.dimension:
            raise CircuitError(f"colour circuit needs {BITS_PER_AXIS * self.dimension} inputs")
        if len(self.circuit.outputs) != 2 * self.dimension:
            raise CircuitError(f"colour circuit needs {2 * self.dimension} outputs")

    def colour(self, cubelet: Cubelet) -> int:
        outputs = self.circuit.evaluate(encode_cubelet(cubelet))
        colours = [c for c, on in zip(output_order(self.dimension), outputs) if on]
        if len(colours) != 1:
            raise CircuitError(f"cubelet {cubelet}: {len(colours)} outputs are true, expected exactly one")
        return colours[0]

    def to_table(self) -> ExplicitColourTable:
        n = self.dimension
        cubelets = list(itertools.product(range(1, CUBELETS_PER_AXIS + 1), repeat=n))
        rows = np.array([encode_cubelet(c) for c in cubelets], dtype=bool)
        out = self.circuit.evaluate_many(rows)
        if not (out.sum(axis=1) == 1).all():
            raise CircuitError("colour circuit is not one-hot on every cubelet")
        colours = np.array(output_order(n))[out.argmax(axis=1)]
        return ExplicitColourTable(colours.reshape((CUBELETS_PER_AXIS,) * n))


def compile_table_circuit(table: ExplicitColourTable) -> BooleanCircuit:
    """One-hot decoders per axis, one minterm per cubelet, one OR per colour output."""
    n = table.dimension
    builder = CircuitBuilder()
    decoders = []
    for _ in range(n):
        bits = builder.inputs(BITS_PER_AXIS)
        lines = []
        for value in range(CUBELETS_PER_AXIS):
            literals = [bits[b] if (value >> b) & 1 else builder.not_(bits[b]) for b in range(BITS_PER_AXIS)]
            lines.append(builder.and_all(literals))
        decoders.append(lines)
    by_colour = {c: [] for c in output_order(n)}
    for cubelet in itertools.product(range(CUBELETS_PER_AXIS), repeat=n):
        minterm = builder.and_all(decoders[a][c] for a, c in enumerate(cubelet))
        by_colour[int(table.table[cubelet])].append(minterm)
    return builder.build([builder.or_all(by_colour[c]) for c in output_order(n)])


# ============================================
# INSTANCE
# ============================================

@dataclass(frozen=True)
class NVHDTInstance:
    dimension: int
    oracle: ColourOracle
    facet_colours: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.oracle.dimension != self.dimension:
            raise InstanceError("oracle dimension differs from the instance dimension")
        if not self.facet_colours:
            object.__setattr__(self, 'facet_colours', default_facet_colours(self.dimension))
        for low, high in self.facet_colours:
            if low != -high:
                raise InstanceError("opposite facets must carry opposite colours")

    @classmethod
    def from_table(cls, table, facet_colours=()) -> 'NVHDTInstance':
        oracle = ExplicitColourTable(np.asarray(table))
        return cls(oracle.dimension, oracle, tuple(facet_colours))

    def colour_of_cubelet(self, cubelet: Cubelet) -> int:
        if len(cubelet) != self.dimension or any(not 1 <= c <= CUBELETS_PER_AXIS for c in cubelet):
            raise DomainError(f"cubelet {cubelet} outside [7]^{self.dimension}")
        return self.oracle.colour(tuple(cubelet))

    def colour_of_point(self, point: Sequence) -> int:
        if len(point) != self.dimension:
            raise DomainError(f"point must have {self.dimension} coordinates")
        return self.oracle.colour(cubelet_of(point))

    def table(self) -> ExplicitColourTable:
        if isinstance(self.oracle, ExplicitColourTable):
            return self.oracle
        return self.oracle.to_table()

    def circuit(self) -> BooleanCircuit:
        if isinstance(self.oracle, CircuitColourOracle):
            return self.oracle.circuit
        return compile_table_circuit(self.oracle)

    def validate(self) -> None:
        """Antipodal boundary cubelets and facet colour constraints, by total scan."""
        arr = self.table().table
        bad = antipodal_violations(arr)
        if len(bad):
            raise InstanceError(f"antipodality violated at cubelet {tuple(int(c) + 1 for c in bad[0])}")
        for axis, pair in enumerate(self.facet_colours):
            for end, colour in zip((0, CUBELETS_PER_AXIS - 1), pair):
                if abs(colour) == 1:
                    continue
                if (np.take(arr, end, axis=axis) == colour).any():
                    raise InstanceError(f"facet coloured {colour} on axis {axis} carries its own colour")
