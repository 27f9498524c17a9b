"""
PPA Reductions Toolkit - Snake Embedding: Folding
Folds one axis of length 3t into t+2 cells along a new axis of seven layers.
Layers 2 and 6 carry the outer thirds, layer 4 the reversed middle third, layers 3 and 5 the
fold-point copies; everything else is flood-filled with -(k+1) / +(k+1).
"""

from typing import Optional

import numpy as np
from scipy import ndimage

from config import get_logger
from numerics.errors import InstanceError, OracleBugError
from numerics.instances import GridPoint, TuckerGridND

logger = get_logger('Snake')

FOLD_LAYERS = 7


def fold_once(g: TuckerGridND, axis: int = 0) -> TuckerGridND:
    m = g.dims[axis]
    if m % 3:
        raise InstanceError(f"axis {axis} has length {m}, not a multiple of 3")
    t = m // 3
    k = g.dimension
    src = np.moveaxis(g.labels, axis, 0)
    rest = src.shape[1:]
    new = np.zeros((t + 2,) + rest + (FOLD_LAYERS,), dtype=np.int8)
    new[0:t + 1, ..., 1] = src[0:t + 1]
    new[t, ..., 2] = src[t]
    new[1:t + 1, ..., 3] = src[t:2 * t][::-1]
    new[1, ..., 4] = src[2 * t - 1]
    new[1:t + 2, ..., 5] = src[2 * t - 1:3 * t]

    components, count = ndimage.label(new == 0)
    low_seed = components[(0,) * new.ndim]
    high_seed = components[tuple(s - 1 for s in new.shape)]
    if count != 2 or low_seed == 0 or high_seed == 0 or low_seed == high_seed:
        raise OracleBugError(f"flood fill found {count} regions; expected two separate seeded regions")
    new[components == low_seed] = -(k + 1)
    new[components == high_seed] = k + 1

    labels = np.moveaxis(new, 0, axis)
    colours = tuple(g.facet_colours) + ((k + 1, -(k + 1)),)
    logger.debug(f"folded axis {axis}: {g.dims} -> {labels.shape}")
    return TuckerGridND(labels, colours)


def fold_preimage(point: GridPoint, axis: int, m: int) -> Optional[GridPoint]:
    """Original point for a folded-grid point, or None for flood-filled cells."""
    t = m // 3
    x, z = point[axis], point[-1]
    rest = point[:axis] + point[axis + 1:-1]
    if z == 2 and x <= t + 1:
        old = x
    elif z == 3 and x == t + 1:
        old = t + 1
    elif z == 4 and 2 <= x <= t + 1:
        old = 2 * t + 2 - x
    elif z == 5 and x == 2:
        old = 2 * t
    elif z == 6 and 2 <= x <= t + 2:
        old = x + 2 * t - 2
    else:
        return None
    return rest[:axis] + (old,) + rest[axis:]
