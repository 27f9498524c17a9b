"""
PPA Reductions Toolkit - Snake Embedding: Cubelet Form
Turns a bounded grid into a 7^n cubelet colouring of [-1, 1]^n and maps solutions back.
"""

from typing import Optional, Sequence, Tuple

import numpy as np

from config import get_logger
from numerics.errors import InstanceError, PullBackError
from numerics.instances import GridPoint, TuckerGridND
from numerics.nvhdt import CUBELETS_PER_AXIS, NVHDTInstance, cubelet_of, default_facet_colours
from snake.compose import MAX_SIDE, FoldTrace, TraceStep
from snake.padding import pad_axis_to_seven

logger = get_logger('Snake')


def prepare_cubelet_grid(g: TuckerGridND, trace: Optional[FoldTrace] = None) -> Tuple[TuckerGridND, Optional[FoldTrace]]:
    """
    Pad every side to 7, move the panchromatic axis (facet colours +-1) first, then rename
    labels so axis a has colour -(a+1) on its min facet and +(a+1) on its max facet.
    """
    if max(g.dims) > MAX_SIDE:
        raise InstanceError(f"grid sides {g.dims} exceed {MAX_SIDE}")
    if len(g.facet_colours) != g.dimension:
        raise InstanceError("grid has no facet colours")
    grid = g
    for axis in range(grid.dimension):
        if grid.dims[axis] < CUBELETS_PER_AXIS:
            padded = pad_axis_to_seven(grid, axis)
            if trace is not None:
                trace = trace.then(TraceStep('pad', grid.dims, padded.dims, axis=axis,
                                             padding=CUBELETS_PER_AXIS - grid.dims[axis]))
            grid = padded
    if any(side != CUBELETS_PER_AXIS for side in grid.dims):
        raise InstanceError(f"sides {grid.dims} are not all 7 after padding")

    panchromatic = next(a for a, (low, _) in enumerate(grid.facet_colours) if abs(low) == 1)
    permutation = (panchromatic,) + tuple(a for a in range(grid.dimension) if a != panchromatic)
    labels = np.transpose(grid.labels, permutation)
    colours = [grid.facet_colours[a] for a in permutation]
    dims_before = grid.dims
    if trace is not None and permutation != tuple(range(grid.dimension)):
        trace = trace.then(TraceStep('permute', dims_before, labels.shape, permutation=permutation))

    mapping = {}
    for a, (_, high) in enumerate(colours):
        sign = 1 if high > 0 else -1
        mapping[abs(high)] = sign * (a + 1)
        mapping[-abs(high)] = -sign * (a + 1)
    relabelled = np.zeros_like(labels)
    for old, new in mapping.items():
        relabelled[labels == old] = new
    if trace is not None:
        trace = trace.then(TraceStep('relabel', labels.shape, labels.shape,
                                     relabel=tuple(sorted(mapping.items()))))
    prepared = TuckerGridND(relabelled, default_facet_colours(grid.dimension))
    return prepared, trace


def grid_to_cubelets(g: TuckerGridND) -> NVHDTInstance:
    """Cubelet (c_1, ..., c_n) takes the colour of grid point (c_1, ..., c_n) of the prepared grid."""
    prepared, _ = prepare_cubelet_grid(g)
    inst = NVHDTInstance.from_table(prepared.labels, prepared.facet_colours)
    logger.debug(f"cubelet form in {inst.dimension} dimensions")
    return inst


def grid_to_cubelets_traced(g: TuckerGridND, trace: FoldTrace) -> Tuple[NVHDTInstance, FoldTrace]:
    prepared, trace = prepare_cubelet_grid(g, trace)
    return NVHDTInstance.from_table(prepared.labels, prepared.facet_colours), trace


def nvhdt_solution_to_pair(inst: NVHDTInstance, points: Sequence[Sequence]) -> Tuple[GridPoint, GridPoint]:
    """Cubelets of the first two oppositely coloured points, as a grid-point pair."""
    cubelets = [cubelet_of(p) for p in points]
    colours = [inst.colour_of_cubelet(c) for c in cubelets]
    for i, ci in enumerate(colours):
        for j in range(i + 1, len(colours)):
            if colours[j] == -ci:
                p, q = cubelets[i], cubelets[j]
                if any(abs(a - b) > 1 for a, b in zip(p, q)):
                    raise PullBackError(f"cubelets {p} and {q} are not adjacent")
                return min(p, q), max(p, q)
    raise PullBackError("no two points carry opposite colours")
