"""
PPA Reductions Toolkit - Wire Models
pydantic models for every instance and solution that crosses a file or HTTP boundary.
Rationals travel as "p" or "p/q" strings.
"""

from typing import Annotated, Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator

from numerics.circuits import BooleanCircuit, Gate, GateOp
from numerics.errors import InstanceError
from numerics.instances import (
    HamSandwichInstance,
    Hyperplane,
    NecklaceInstance,
    NecklaceSplit,
    TuckerGrid2D,
    TuckerGridND,
)
from numerics.measures import CHInstance, LabelledCutSet, StepMeasure
from numerics.nvhdt import CircuitColourOracle, NVHDTInstance
from numerics.rational import RATIONAL_PATTERN, as_rational, format_rational

RationalStr = Annotated[str, Field(pattern=RATIONAL_PATTERN)]


def _fmt(values) -> List[str]:
    return [format_rational(v) for v in values]


# ============================================
# CONSENSUS HALVING
# ============================================

class StepMeasureModel(BaseModel):
    length: RationalStr
    breakpoints: List[RationalStr] = []
    values: List[RationalStr]

    @classmethod
    def from_domain(cls, m: StepMeasure) -> 'StepMeasureModel':
        return cls(length=format_rational(m.length), breakpoints=_fmt(m.breakpoints), values=_fmt(m.values))

    def to_domain(self) -> StepMeasure:
        return StepMeasure(
            as_rational(self.length, 'length'),
            tuple(as_rational(b, 'breakpoint') for b in self.breakpoints),
            tuple(as_rational(v, 'value') for v in self.values),
        )


class CHInstanceModel(BaseModel):
    length: RationalStr
    agents: List[StepMeasureModel]
    epsilon: RationalStr
    ce_region_length: int = 0
    agent_names: List[str] = []

    @classmethod
    def from_domain(cls, inst: CHInstance) -> 'CHInstanceModel':
        return cls(
            length=format_rational(inst.length),
            agents=[StepMeasureModel.from_domain(m) for m in inst.agents],
            epsilon=format_rational(inst.epsilon),
            ce_region_length=inst.ce_region_length,
            agent_names=list(inst.agent_names),
        )

    def to_domain(self) -> CHInstance:
        return CHInstance(
            length=as_rational(self.length, 'length'),
            agents=tuple(m.to_domain() for m in self.agents),
            epsilon=as_rational(self.epsilon, 'epsilon'),
            ce_region_length=self.ce_region_length,
            agent_names=tuple(self.agent_names),
        )


class CutSetModel(BaseModel):
    cuts: List[RationalStr]

    @classmethod
    def from_domain(cls, cuts: LabelledCutSet) -> 'CutSetModel':
        return cls(cuts=_fmt(cuts.cuts))

    def to_domain(self) -> LabelledCutSet:
        return LabelledCutSet.of(self.cuts)


# ============================================
# NECKLACES AND HAM SANDWICH
# ============================================

class NecklaceModel(BaseModel):
    beads: List[int]
    k: int = 2
    num_colours: int = 0

    @classmethod
    def from_domain(cls, inst: NecklaceInstance) -> 'NecklaceModel':
        return cls(beads=list(inst.beads), k=inst.k, num_colours=inst.num_colours)

    def to_domain(self) -> NecklaceInstance:
        return NecklaceInstance(tuple(self.beads), self.k, self.num_colours)


class NecklaceSplitModel(BaseModel):
    cut_positions: List[int]
    piece_owner: List[int]

    @classmethod
    def from_domain(cls, split: NecklaceSplit) -> 'NecklaceSplitModel':
        return cls(**split.to_dict())

    def to_domain(self) -> NecklaceSplit:
        return NecklaceSplit(tuple(self.cut_positions), tuple(self.piece_owner))


class HamSandwichModel(BaseModel):
    point_sets: List[List[List[RationalStr]]]

    @classmethod
    def from_domain(cls, inst: HamSandwichInstance) -> 'HamSandwichModel':
        return cls(point_sets=[[_fmt(p) for p in s] for s in inst.point_sets])

    def to_domain(self) -> HamSandwichInstance:
        return HamSandwichInstance.of(self.point_sets)


class HyperplaneModel(BaseModel):
    normal: List[RationalStr]
    offset: RationalStr

    @classmethod
    def from_domain(cls, h: Hyperplane) -> 'HyperplaneModel':
        return cls(normal=_fmt(h.normal), offset=format_rational(h.offset))

    def to_domain(self) -> Hyperplane:
        return Hyperplane.normalized(self.normal, self.offset)


# ============================================
# TUCKER GRIDS
# ============================================

class Tucker2DModel(BaseModel):
    labels: List[List[int]]

    @classmethod
    def from_domain(cls, grid: TuckerGrid2D) -> 'Tucker2DModel':
        return cls(labels=grid.labels.tolist())

    def to_domain(self) -> TuckerGrid2D:
        return TuckerGrid2D(np.array(self.labels))


class TuckerNDModel(BaseModel):
    labels: Any
    facet_colours: List[Tuple[int, int]] = []

    @classmethod
    def from_domain(cls, grid: TuckerGridND) -> 'TuckerNDModel':
        return cls(labels=grid.labels.tolist(), facet_colours=[list(p) for p in grid.facet_colours])

    def to_domain(self) -> TuckerGridND:
        return TuckerGridND(np.array(self.labels), tuple(tuple(p) for p in self.facet_colours))


class GridPairModel(BaseModel):
    p1: List[int]
    p2: List[int]

    def to_domain(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return tuple(self.p1), tuple(self.p2)


# ============================================
# CIRCUITS AND NVHDT
# ============================================

class GateModel(BaseModel):
    op: GateOp
    inputs: List[int] = []
    value: bool = False


class CircuitModel(BaseModel):
    gates: List[GateModel]
    outputs: List[int]

    @classmethod
    def from_domain(cls, circuit: BooleanCircuit) -> 'CircuitModel':
        return cls(**circuit.to_dict())

    def to_domain(self) -> BooleanCircuit:
        return BooleanCircuit(
            tuple(Gate(g.op, tuple(g.inputs), g.value) for g in self.gates),
            tuple(self.outputs),
        )


class NVHDTModel(BaseModel):
    """Exactly one of `table` (nested 7 x ... x 7 list) or `circuit`."""
    dimension: int
    table: Optional[Any] = None
    circuit: Optional[CircuitModel] = None
    facet_colours: List[Tuple[int, int]] = []

    @model_validator(mode='after')
    def _one_backend(self):
        if (self.table is None) == (self.circuit is None):
            raise ValueError("give exactly one of 'table' or 'circuit'")
        return self

    @classmethod
    def from_domain(cls, inst: NVHDTInstance) -> 'NVHDTModel':
        pairs = [list(p) for p in inst.facet_colours]
        if isinstance(inst.oracle, CircuitColourOracle):
            return cls(dimension=inst.dimension, circuit=CircuitModel.from_domain(inst.oracle.circuit),
                       facet_colours=pairs)
        return cls(dimension=inst.dimension, table=inst.table().table.tolist(), facet_colours=pairs)

    def to_domain(self) -> NVHDTInstance:
        facets = tuple(tuple(p) for p in self.facet_colours)
        if self.circuit is not None:
            oracle = CircuitColourOracle(self.circuit.to_domain(), self.dimension)
            return NVHDTInstance(self.dimension, oracle, facets)
        inst = NVHDTInstance.from_table(self.table, facets)
        if inst.dimension != self.dimension:
            raise InstanceError(f"table has dimension {inst.dimension}, not {self.dimension}")
        return inst


class NVHDTSolutionModel(BaseModel):
    points: List[List[RationalStr]]
    delta: Optional[RationalStr] = None

    def to_domain(self) -> List[Tuple]:
        return [tuple(as_rational(x, 'coordinate') for x in p) for p in self.points]


class ReductionParamsModel(BaseModel):
    """Overrides on top of the desk-scale defaults for dimension n."""
    n: int
    delta_tiny: Optional[RationalStr] = None
    delta_t: Optional[RationalStr] = None
    delta_w: Optional[RationalStr] = None
    p_large: Optional[int] = None
    p_c: Optional[int] = None
    frac_bits: Optional[int] = None

    def overrides(self) -> Dict[str, Any]:
        return {k: v for k, v in self.model_dump(exclude={'n'}).items() if v is not None}

    def to_domain(self):
        from mobius.params import ReductionParams
        return ReductionParams.for_dimension(self.n, **self.overrides())


# ============================================
# REPORTS
# ============================================

class Report(BaseModel):
    """Envelope of every CLI and service response."""
    command: str
    status: str = Field(pattern=r'^(ok|no|error)$')
    exit_code: int = 0
    result: Dict[str, Any] = {}
    error: Optional[str] = None
