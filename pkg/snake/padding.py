"""
PPA Reductions Toolkit - Snake Embedding: Padding
Layer duplication that lengthens one axis while keeping the boundary antipodal.
"""

from typing import Optional, Tuple

import numpy as np

from numerics.instances import GridPoint, TuckerGridND


def lex_above_reflection(shape: Tuple[int, ...]) -> np.ndarray:
    """Boolean array over `shape`: True where y is lexicographically greater than its reflection."""
    result = np.zeros(shape, dtype=bool)
    undecided = np.ones(shape, dtype=bool)
    grids = np.indices(shape)
    for axis, m in enumerate(shape):
        y = grids[axis]
        reflected = m - 1 - y
        result |= undecided & (y > reflected)
        undecided &= y == reflected
    return result


def padded_index(x: int, m: int, deficit: int, above_reflection: bool) -> int:
    """
    1-based index on the old axis of length m for index x on the padded axis.
    deficit // 2 outer layers are duplicated on each side; an odd deficit also inserts one
    middle layer. On an odd axis the centre layer is doubled; on an even axis the inserted
    layer copies its left neighbour unless the remaining coordinates lie above their reflection.
    """
    outer, middle = divmod(deficit, 2)
    x = min(max(x - outer, 1), m + middle)
    if not middle:
        return x
    half = (m + 1) // 2 if m % 2 else m // 2
    if x <= half:
        return x
    if x == half + 1:
        if m % 2:
            return half
        return half + 1 if above_reflection else half
    return x - 1


def pad_axis(g: TuckerGridND, axis: int, deficit: int) -> TuckerGridND:
    """Lengthen `axis` by `deficit` layers (see padded_index)."""
    if deficit == 0:
        return g
    m = g.dims[axis]
    outer, middle = divmod(deficit, 2)
    index = np.array([padded_index(x, m, deficit, False) - 1 for x in range(1, m + deficit + 1)])
    labels = np.take(g.labels, index, axis=axis)
    if middle and m % 2 == 0:
        inserted = outer + m // 2
        rest_shape = g.dims[:axis] + g.dims[axis + 1:]
        above = lex_above_reflection(rest_shape)
        right_copy = np.take(g.labels, m // 2, axis=axis)
        layer = np.where(above, right_copy, np.take(labels, inserted, axis=axis))
        slicer = [slice(None)] * g.dimension
        slicer[axis] = inserted
        labels[tuple(slicer)] = layer
    return TuckerGridND(labels, g.facet_colours)


def pad_to_multiple_of_3(g: TuckerGridND, axis: int) -> TuckerGridND:
    """Pad `axis` by l = (3 - m mod 3) mod 3 layers."""
    return pad_axis(g, axis, (3 - g.dims[axis] % 3) % 3)


def pad_axis_to_seven(g: TuckerGridND, axis: int) -> TuckerGridND:
    return pad_axis(g, axis, 7 - g.dims[axis])


def pad_preimage(point: GridPoint, dims_before: Tuple[int, ...], axis: int, deficit: int) -> GridPoint:
    m = dims_before[axis]
    rest = point[:axis] + point[axis + 1:]
    rest_dims = dims_before[:axis] + dims_before[axis + 1:]
    above = _lex_above(rest, rest_dims)
    x = padded_index(point[axis], m, deficit, above)
    return point[:axis] + (x,) + point[axis + 1:]


def _lex_above(rest: GridPoint, dims: Tuple[int, ...]) -> bool:
    for y, m in zip(rest, dims):
        reflected = m + 1 - y
        if y != reflected:
            return y > reflected
    return False


def extend_to_strip(g: TuckerGridND) -> Tuple[TuckerGridND, bool]:
    """
    The 3m x m pre-step on a 2D grid: the original occupies columns m+1..2m, the side columns
    repeat its first and last rows so the short sides carry one label each. Labels 1 and 2 are
    swapped when that label has absolute value 1. Returns the strip and whether a swap happened.
    """
    lab = g.labels
    m = lab.shape[0]
    x = np.arange(1, 3 * m + 1)[:, None]
    y = np.arange(1, m + 1)[None, :]
    strip = np.zeros((3 * m, m), dtype=np.int8)
    left = np.broadcast_to(np.maximum(m + 1 - x, y), (3 * m, m))
    right = np.broadcast_to(np.minimum(3 * m + 1 - x, y), (3 * m, m))
    strip[:m] = lab[0][left[:m] - 1]
    strip[m:2 * m] = lab
    strip[2 * m:] = lab[m - 1][right[2 * m:] - 1]
    swap = abs(int(lab[0, m - 1])) == 1
    if swap:
        strip = np.sign(strip) * np.where(np.abs(strip) == 1, 2, 1)
    s = int(strip[0, 0])
    return TuckerGridND(strip, ((-s, s), (1, -1))), swap


def strip_preimage(point: GridPoint, m: int) -> Optional[GridPoint]:
    x, y = point
    if x <= m:
        return 1, max(m + 1 - x, y)
    if x > 2 * m:
        return m, min(3 * m + 1 - x, y)
    return x - m, y
