"""
PPA Reductions Toolkit - Sensor Agents
Sensors report the label at one point of the c-e region; blanket sensors report large label
imbalances over a window of length 2.
"""

from fractions import Fraction
from typing import List

from gadgets.blocks import (
    BLANKET_LEFT,
    BLANKET_MIDDLE,
    BLANKET_RIGHT,
    LEFT_OUT,
    RIGHT_OUT,
    BlockKind,
    GadgetBlock,
    agent_measure,
    at,
)
from mobius.colouring import comb_blocks, sensor_block
from mobius.params import ReductionParams
from numerics.measures import StepMeasure

SENSOR_CE_MASS = Fraction(1, 10)
SENSOR_DETECTOR_MASS = Fraction(9, 20)


def sensor_blocks(i: int, j: int, params: ReductionParams, slot: Fraction) -> List[GadgetBlock]:
    a, b = sensor_block(i, j, params)
    return [
        GadgetBlock(a, b, SENSOR_CE_MASS, BlockKind.SENSOR),
        GadgetBlock(*at(slot, LEFT_OUT), SENSOR_DETECTOR_MASS, BlockKind.THIN_DENSE),
        GadgetBlock(*at(slot, RIGHT_OUT), SENSOR_DETECTOR_MASS, BlockKind.THIN_DENSE),
    ]


def build_sensor_agent(i: int, j: int, params: ReductionParams, slot: Fraction, length) -> StepMeasure:
    """s_{i,j}: 1/10 on its shifted c-e block, 9/20 + 9/20 in its detector slot."""
    return agent_measure(sensor_blocks(i, j, params, slot), length)


def blanket_blocks(i: int, j: int, params: ReductionParams, slot: Fraction) -> List[GadgetBlock]:
    per_block = params.delta_tiny / 20
    blocks = [GadgetBlock(a, b, per_block, BlockKind.SENSOR) for a, b in comb_blocks(i, j, params)]
    side = 9 * (1 - params.kappa) / 20
    blocks.append(GadgetBlock(*at(slot, BLANKET_LEFT), side, BlockKind.THIN_DENSE))
    blocks.append(GadgetBlock(*at(slot, BLANKET_MIDDLE), 9 * params.kappa / 10, BlockKind.THIN_DENSE))
    blocks.append(GadgetBlock(*at(slot, BLANKET_RIGHT), side, BlockKind.THIN_DENSE))
    return blocks


def build_blanket_sensor(i: int, j: int, params: ReductionParams, slot: Fraction, length) -> StepMeasure:
    """b_{i,j}: a comb of 2/delta_tiny blocks over [j-2, j] plus a three-block detector."""
    return agent_measure(blanket_blocks(i, j, params, slot), length)
