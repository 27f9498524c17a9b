"""
PPA Reductions Toolkit - Snake Embedding: Composition and Pull-Back
Repeated padding and folding down to sides of at most 7, with a replayable trace.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from config import get_logger
from numerics.errors import PullBackError
from numerics.instances import GridPoint, TuckerGrid2D, TuckerGridND, antipodal_violations
from snake.fold import fold_once, fold_preimage
from snake.padding import extend_to_strip, pad_axis, pad_preimage, strip_preimage

logger = get_logger('Snake')

MAX_SIDE = 7


# ============================================
# TRACE
# ============================================

@dataclass(frozen=True)
class TraceStep:
    """
    One grid transformation. kind is one of:
      extend  - 3m x m strip pre-step (swap: labels 1 and 2 exchanged)
      pad     - `padding` extra layers on `axis`
      fold    - fold of `axis`, new axis appended last
      permute - new axis a is old axis permutation[a]
      relabel - label l becomes relabel[l]
    """
    kind: str
    dims_before: Tuple[int, ...]
    dims_after: Tuple[int, ...]
    axis: int = -1
    padding: int = 0
    swap: bool = False
    permutation: Tuple[int, ...] = ()
    relabel: Tuple[Tuple[int, int], ...] = ()

    @property
    def fold_points(self) -> Tuple[int, int]:
        m = self.dims_before[self.axis]
        return m // 3 + 1, 2 * m // 3

    def preimage(self, point: GridPoint) -> Optional[GridPoint]:
        if self.kind == 'extend':
            return strip_preimage(point, self.dims_before[0])
        if self.kind == 'pad':
            return pad_preimage(point, self.dims_before, self.axis, self.padding)
        if self.kind == 'fold':
            return fold_preimage(point, self.axis, self.dims_before[self.axis])
        if self.kind == 'permute':
            old = [0] * len(point)
            for a, source in enumerate(self.permutation):
                old[source] = point[a]
            return tuple(old)
        return point

    def to_dict(self) -> Dict:
        return {
            'kind': self.kind,
            'dims_before': list(self.dims_before),
            'dims_after': list(self.dims_after),
            'axis': self.axis,
            'padding': self.padding,
            'swap': self.swap,
            'permutation': list(self.permutation),
            'relabel': [list(p) for p in self.relabel],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'TraceStep':
        return cls(
            kind=data['kind'],
            dims_before=tuple(data['dims_before']),
            dims_after=tuple(data['dims_after']),
            axis=data.get('axis', -1),
            padding=data.get('padding', 0),
            swap=data.get('swap', False),
            permutation=tuple(data.get('permutation', ())),
            relabel=tuple(tuple(p) for p in data.get('relabel', ())),
        )


@dataclass(frozen=True)
class FoldTrace:
    """Source grid plus every step applied to it, in order."""
    source: np.ndarray
    steps: Tuple[TraceStep, ...] = field(default=())

    def then(self, step: TraceStep) -> 'FoldTrace':
        return FoldTrace(self.source, self.steps + (step,))

    @property
    def folds(self) -> List[Dict]:
        """Per-fold records: folded axis, padding applied just before, fold points."""
        records = []
        for k, step in enumerate(self.steps):
            if step.kind != 'fold':
                continue
            previous = self.steps[k - 1] if k else None
            ell = previous.padding if previous and previous.kind == 'pad' and previous.axis == step.axis else 0
            records.append({'folded_axis': step.axis, 'padding': ell, 'fold_points': step.fold_points})
        return records

    def map_point(self, point: GridPoint) -> Optional[GridPoint]:
        for step in reversed(self.steps):
            point = step.preimage(tuple(point))
            if point is None:
                return None
        return point

    def to_dict(self) -> Dict:
        return {'source': self.source.tolist(), 'steps': [s.to_dict() for s in self.steps]}

    @classmethod
    def from_dict(cls, data: Dict) -> 'FoldTrace':
        source = np.array(data['source'], dtype=np.int8)
        return cls(source, tuple(TraceStep.from_dict(s) for s in data['steps']))


# ============================================
# COMPOSITION
# ============================================

def compose_folds(g: Union[TuckerGrid2D, TuckerGridND], extend: bool = True) -> Tuple[TuckerGridND, FoldTrace]:
    """
    Fold the longest axis (lowest index on ties) until every side is at most 7.
    A 2D grid is first extended to its 3m x m strip; pass extend=False for a grid whose facet
    colours are already set.
    """
    trace = FoldTrace(np.array(g.labels, dtype=np.int8))
    if extend:
        grid, swap = extend_to_strip(g.to_nd() if isinstance(g, TuckerGrid2D) else g)
        trace = trace.then(TraceStep('extend', tuple(g.labels.shape), grid.dims, swap=swap))
    else:
        grid = g.to_nd() if isinstance(g, TuckerGrid2D) else g
    while max(grid.dims) > MAX_SIDE:
        axis = int(np.argmax(grid.dims))
        ell = (3 - grid.dims[axis] % 3) % 3
        if ell:
            padded = pad_axis(grid, axis, ell)
            trace = trace.then(TraceStep('pad', grid.dims, padded.dims, axis=axis, padding=ell))
            grid = padded
        folded = fold_once(grid, axis)
        trace = trace.then(TraceStep('fold', grid.dims, folded.dims, axis=axis))
        grid = folded
    logger.info(f"composed {len(trace.folds)} folds: {tuple(g.labels.shape)} -> {grid.dims}")
    return grid, trace


def check_def34(g: TuckerGridND) -> List[str]:
    """Violations of the bounded-grid constraints; empty when the grid qualifies."""
    problems = []
    if max(g.dims) > MAX_SIDE:
        problems.append(f"side longer than {MAX_SIDE}: {g.dims}")
    if len(antipodal_violations(g.labels)):
        problems.append("boundary is not antipodal")
    if len(g.facet_colours) != g.dimension:
        problems.append("facet colours missing")
        return problems
    used = set()
    for low, high in g.facet_colours:
        if low != -high:
            problems.append(f"facets coloured {low} and {high} are not opposite")
        used.update((low, high))
    if used != set(range(1, g.dimension + 1)) | set(range(-g.dimension, 0)):
        problems.append(f"facet colours {sorted(used)} do not use every colour")
    for axis, colour, point in g.facet_violations():
        problems.append(f"facet coloured {colour} (axis {axis}) has label {colour} at {point}")
    return problems


def pull_back_solution(trace: FoldTrace, pair: Tuple[GridPoint, GridPoint]) -> Tuple[GridPoint, GridPoint]:
    """Map a complementary pair of the final grid to one of the source grid."""
    mapped = []
    for point in pair:
        original = trace.map_point(point)
        if original is None:
            raise PullBackError(f"point {point} lies in flood-filled padding and has no preimage")
        mapped.append(original)
    p, q = mapped
    source = trace.source
    if any(abs(a - b) > 1 for a, b in zip(p, q)):
        raise PullBackError(f"preimages {p} and {q} are not adjacent")
    if source[tuple(c - 1 for c in p)] != -source[tuple(c - 1 for c in q)]:
        raise PullBackError(f"preimages {p} and {q} are not complementary")
    return p, q
