"""
PPA Reductions Toolkit - Problem Instances
Necklaces, ham-sandwich point sets, hyperplanes and Tucker grids.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from numerics.errors import DomainError, InstanceError
from numerics.rational import as_rational

GridPoint = Tuple[int, ...]


# ============================================
# NECKLACES
# ============================================

@dataclass(frozen=True)
class NecklaceInstance:
    """Open string of beads coloured 1..num_colours, to be shared by k thieves."""
    beads: Tuple[int, ...]
    k: int = 2
    num_colours: int = 0

    def __post_init__(self):
        if self.k < 2:
            raise InstanceError("at least two thieves are needed")
        if not self.beads:
            raise InstanceError("necklace has no beads")
        if self.num_colours == 0:
            object.__setattr__(self, 'num_colours', max(self.beads))
        for b in self.beads:
            if not 1 <= b <= self.num_colours:
                raise InstanceError(f"bead colour {b} outside 1..{self.num_colours}")
        for colour, count in self.colour_counts().items():
            if count % self.k:
                raise InstanceError(f"colour {colour} has {count} beads, not divisible by k={self.k}")

    def colour_counts(self) -> Dict[int, int]:
        counts = Counter(self.beads)
        return {c: counts.get(c, 0) for c in range(1, self.num_colours + 1)}

    def shares(self) -> Dict[int, int]:
        """a_i: beads of colour i each thief must receive."""
        return {c: count // self.k for c, count in self.colour_counts().items()}

    @property
    def max_cuts(self) -> int:
        return (self.k - 1) * self.num_colours


@dataclass(frozen=True)
class NecklaceSplit:
    """
    cut_positions are gap indices: gap g sits between bead g and bead g+1 (1-based).
    piece_owner[p] is the 0-based thief that takes piece p.
    """
    cut_positions: Tuple[int, ...]
    piece_owner: Tuple[int, ...]

    def __post_init__(self):
        if len(self.piece_owner) != len(self.cut_positions) + 1:
            raise InstanceError("need one owner per piece")

    def pieces(self, num_beads: int) -> List[Tuple[int, int]]:
        """Half-open 0-based bead ranges of every piece."""
        edges = [0] + list(self.cut_positions) + [num_beads]
        return [(edges[p], edges[p + 1]) for p in range(len(edges) - 1)]

    def to_dict(self):
        return {'cut_positions': list(self.cut_positions), 'piece_owner': list(self.piece_owner)}


# ============================================
# HAM SANDWICH
# ============================================

Point = Tuple[Fraction, ...]


@dataclass(frozen=True)
class HamSandwichInstance:
    dimension: int
    point_sets: Tuple[Tuple[Point, ...], ...]

    def __post_init__(self):
        if self.dimension < 1:
            raise InstanceError("dimension must be positive")
        if len(self.point_sets) != self.dimension:
            raise InstanceError(f"need {self.dimension} point sets, got {len(self.point_sets)}")
        for s in self.point_sets:
            for p in s:
                if len(p) != self.dimension:
                    raise InstanceError(f"point {p} is not {self.dimension}-dimensional")

    @classmethod
    def of(cls, point_sets) -> 'HamSandwichInstance':
        sets = tuple(tuple(tuple(as_rational(c, 'coordinate') for c in p) for p in s) for s in point_sets)
        dimension = len(sets)
        return cls(dimension, sets)

    def union(self) -> List[Point]:
        return [p for s in self.point_sets for p in s]


@dataclass(frozen=True)
class Hyperplane:
    """{x : <normal, x> = offset} with an L1-normalised normal."""
    normal: Tuple[Fraction, ...]
    offset: Fraction

    def __post_init__(self):
        if all(c == 0 for c in self.normal):
            raise InstanceError("hyperplane normal is the zero vector")
        if sum(abs(c) for c in self.normal) != 1:
            raise InstanceError("hyperplane normal must have L1 norm exactly 1")

    @classmethod
    def normalized(cls, normal: Sequence, offset) -> 'Hyperplane':
        normal = tuple(as_rational(c, 'normal') for c in normal)
        offset = as_rational(offset, 'offset')
        scale = sum(abs(c) for c in normal)
        if scale == 0:
            raise InstanceError("hyperplane normal is the zero vector")
        return cls(tuple(c / scale for c in normal), offset / scale)

    def value(self, point: Sequence[Fraction]) -> Fraction:
        return sum((g * x for g, x in zip(self.normal, point)), Fraction(0)) - self.offset

    def side(self, point: Sequence[Fraction]) -> int:
        v = self.value(point)
        return (v > 0) - (v < 0)

    def negated(self) -> 'Hyperplane':
        return Hyperplane(tuple(-c for c in self.normal), -self.offset)


# ============================================
# TUCKER GRIDS
# ============================================

def _frozen(labels) -> np.ndarray:
    arr = np.array(labels, dtype=np.int8)
    arr.setflags(write=False)
    return arr


def boundary_mask(shape: Tuple[int, ...]) -> np.ndarray:
    mask = np.zeros(shape, dtype=bool)
    for axis, m in enumerate(shape):
        index = [slice(None)] * len(shape)
        index[axis] = 0
        mask[tuple(index)] = True
        index[axis] = m - 1
        mask[tuple(index)] = True
    return mask


def antipodal_violations(labels: np.ndarray) -> np.ndarray:
    """0-based boundary cells whose label is not the negation of their antipode's."""
    mirrored = labels[tuple(slice(None, None, -1) for _ in labels.shape)]
    bad = boundary_mask(labels.shape) & (labels != -mirrored)
    return np.argwhere(bad)


@dataclass(frozen=True)
class TuckerGrid2D:
    """labels[i-1, j-1] = lambda(i, j), entries in {+-1, +-2}."""
    labels: np.ndarray

    def __post_init__(self):
        arr = _frozen(self.labels)
        object.__setattr__(self, 'labels', arr)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise InstanceError("2D Tucker grid must be square")
        if not np.isin(arr, (-2, -1, 1, 2)).all():
            raise InstanceError("2D Tucker labels must lie in {+-1, +-2}")
        m = self.m
        for i in range(1, m + 1):
            if arr[i - 1, 0] != -arr[m - i, m - 1]:
                raise InstanceError(f"boundary violated: lambda({i},1) != -lambda({m - i + 1},{m})")
            if arr[0, i - 1] != -arr[m - 1, m - i]:
                raise InstanceError(f"boundary violated: lambda(1,{i}) != -lambda({m},{m - i + 1})")

    @property
    def m(self) -> int:
        return self.labels.shape[0]

    def label(self, point: GridPoint) -> int:
        check_point(self.labels.shape, point)
        return int(self.labels[point[0] - 1, point[1] - 1])

    def to_nd(self) -> 'TuckerGridND':
        return TuckerGridND(self.labels, ((-1, 1), (-2, 2)))


@dataclass(frozen=True)
class TuckerGridND:
    """
    Labelled grid [m_1] x ... x [m_n] with labels in +-[n].
    facet_colours[a] = (colour of the x_a = 1 facet, colour of the x_a = m_a facet).
    """
    labels: np.ndarray
    facet_colours: Tuple[Tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        arr = _frozen(self.labels)
        object.__setattr__(self, 'labels', arr)
        n = arr.ndim
        if not np.isin(np.abs(arr), np.arange(1, n + 1)).all():
            raise InstanceError(f"labels must lie in +-[{n}]")
        if self.facet_colours:
            colours = tuple((int(a), int(b)) for a, b in self.facet_colours)
            object.__setattr__(self, 'facet_colours', colours)
            if len(colours) != n:
                raise InstanceError("one facet colour pair per axis")
            for low, high in colours:
                if low != -high:
                    raise InstanceError("opposite facets must carry opposite colours")
        bad = antipodal_violations(arr)
        if len(bad):
            raise InstanceError(f"antipodality violated at {tuple(int(c) + 1 for c in bad[0])}")

    @property
    def dims(self) -> Tuple[int, ...]:
        return self.labels.shape

    @property
    def dimension(self) -> int:
        return self.labels.ndim

    def label(self, point: GridPoint) -> int:
        check_point(self.dims, point)
        return int(self.labels[tuple(c - 1 for c in point)])

    def facet_violations(self) -> List[Tuple[int, int, GridPoint]]:
        """(axis, colour, point) for every facet point carrying its non-panchromatic facet colour."""
        found = []
        for axis, pair in enumerate(self.facet_colours):
            for end, colour in zip((0, self.dims[axis] - 1), pair):
                if abs(colour) == 1:
                    continue
                face = np.take(self.labels, end, axis=axis)
                for idx in np.argwhere(face == colour):
                    point = list(int(c) + 1 for c in idx)
                    point.insert(axis, end + 1)
                    found.append((axis, colour, tuple(point)))
        return found


def check_point(shape: Tuple[int, ...], point: GridPoint) -> None:
    if len(point) != len(shape) or any(not 1 <= c <= m for c, m in zip(point, shape)):
        raise DomainError(f"point {tuple(point)} outside grid {tuple(shape)}")
