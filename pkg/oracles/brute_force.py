"""
PPA Reductions Toolkit - Brute-Force Oracles
Exhaustive solvers for small instances; ground truth for the reductions.
Every search returns the lexicographically smallest solution, whatever the worker count.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

import config
from config import get_logger
from numerics.errors import InstanceError, OracleBugError, SearchBoundError
from numerics.instances import (
    GridPoint,
    HamSandwichInstance,
    Hyperplane,
    NecklaceInstance,
    NecklaceSplit,
    TuckerGrid2D,
    TuckerGridND,
)
from oracles.verifiers import find_side_assignment

logger = get_logger('Oracle')


# ============================================
# NECKLACE
# ============================================

def _split_is_valid(prefix: np.ndarray, shares: np.ndarray, gaps: Tuple[int, ...], phase: int) -> bool:
    edges = (0,) + gaps + (prefix.shape[0] - 1,)
    held = np.zeros((2, prefix.shape[1]), dtype=np.int64)
    for p in range(len(edges) - 1):
        held[(p + phase) % 2] += prefix[edges[p + 1]] - prefix[edges[p]]
    return bool((held == shares).all())


def _search_from(prefix, shares, max_cuts: int, gaps: Tuple[int, ...]) -> Optional[Tuple[Tuple[int, ...], int]]:
    """Preorder walk of increasing gap tuples starting with `gaps`; the first hit is the lex-min."""
    for phase in (0, 1):
        if _split_is_valid(prefix, shares, gaps, phase):
            return gaps, phase
    if len(gaps) == max_cuts:
        return None
    last_gap = prefix.shape[0] - 1
    for g in range(gaps[-1] + 1 if gaps else 1, last_gap):
        found = _search_from(prefix, shares, max_cuts, gaps + (g,))
        if found:
            return found
    return None


def brute_force_necklace(inst: NecklaceInstance, k: int = 2, max_beads: Optional[int] = None,
                         jobs: Optional[int] = None) -> Optional[NecklaceSplit]:
    """Lexicographically smallest two-thief split with at most n cuts."""
    max_beads = config.BRUTE_FORCE_MAX_BEADS if max_beads is None else max_beads
    jobs = config.JOBS if jobs is None else jobs
    if k != 2 or inst.k != 2:
        raise InstanceError("brute-force necklace search handles two thieves")
    if len(inst.beads) > max_beads:
        raise SearchBoundError(f"{len(inst.beads)} beads exceed the bound of {max_beads}")
    onehot = np.zeros((len(inst.beads), inst.num_colours), dtype=np.int64)
    onehot[np.arange(len(inst.beads)), np.array(inst.beads) - 1] = 1
    prefix = np.vstack([np.zeros(inst.num_colours, dtype=np.int64), np.cumsum(onehot, axis=0)])
    shares = np.array([inst.shares()[c] for c in range(1, inst.num_colours + 1)])
    max_cuts = inst.max_cuts

    found = None
    for phase in (0, 1):
        if _split_is_valid(prefix, shares, (), phase):
            found = ((), phase)
            break
    if found is None:
        roots = [(g,) for g in range(1, len(inst.beads))]
        if jobs > 1 and len(roots) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_search_from, itertools.repeat(prefix), itertools.repeat(shares),
                                        itertools.repeat(max_cuts), roots))
        else:
            results = []
            for root in roots:
                results.append(_search_from(prefix, shares, max_cuts, root))
                if results[-1]:
                    break
        found = next((r for r in results if r), None)
    if found is None:
        return None
    gaps, phase = found
    owners = tuple((p + phase) % 2 for p in range(len(gaps) + 1))
    logger.debug(f"necklace {inst.beads}: cuts {gaps}")
    return NecklaceSplit(gaps, owners)


# ============================================
# HAM SANDWICH
# ============================================

def _nullspace_vector(rows: List[List[Fraction]], n: int) -> Optional[Tuple[Fraction, ...]]:
    """A nonzero exact solution of rows . x = 0 when the rows have rank n-1, else None."""
    matrix = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][col]
        matrix[r] = [x / lead for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][col] != 0:
                factor = matrix[i][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(col)
        r += 1
    if r != n - 1:
        return None
    free = next(c for c in range(n) if c not in pivots)
    vector = [Fraction(0)] * n
    vector[free] = Fraction(1)
    for row, col in zip(matrix, pivots):
        vector[col] = -row[free]
    return tuple(vector)


def hyperplane_through(points: Sequence[Sequence[Fraction]]) -> Optional[Hyperplane]:
    """Canonical hyperplane through n affinely independent points of R^n."""
    n = len(points[0])
    base = points[0]
    rows = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    if n == 1:
        return Hyperplane.normalized((1,), base[0])
    normal = _nullspace_vector(rows, n)
    if normal is None:
        return None
    first = next(c for c in normal if c != 0)
    if first < 0:
        normal = tuple(-c for c in normal)
    offset = sum((g * x for g, x in zip(normal, base)), Fraction(0))
    return Hyperplane.normalized(normal, offset)


def _try_subsets(inst: HamSandwichInstance, union, first: int) -> Optional[Hyperplane]:
    n = inst.dimension
    for rest in itertools.combinations(range(first + 1, len(union)), n - 1):
        h = hyperplane_through([union[first]] + [union[i] for i in rest])
        if h is not None and find_side_assignment(inst, h) is not None:
            return h
    return None


def brute_force_ham_sandwich(inst: HamSandwichInstance, max_dimension: Optional[int] = None,
                             max_points: Optional[int] = None, jobs: Optional[int] = None) -> Hyperplane:
    """
    First bisecting hyperplane through n input points, subsets taken in lexicographic order of
    (set, point) indices. Degenerate unions fall back to hyperplanes containing their affine hull.
    """
    max_dimension = config.BRUTE_FORCE_MAX_DIMENSION if max_dimension is None else max_dimension
    max_points = config.BRUTE_FORCE_MAX_POINTS if max_points is None else max_points
    jobs = config.JOBS if jobs is None else jobs
    n = inst.dimension
    if n > max_dimension:
        raise SearchBoundError(f"dimension {n} exceeds the bound of {max_dimension}")
    if any(len(s) > max_points for s in inst.point_sets):
        raise SearchBoundError(f"a point set exceeds {max_points} points")
    union = inst.union()
    if not union:
        raise InstanceError("ham sandwich instance has no points")
    firsts = range(len(union))
    if jobs > 1 and len(union) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_try_subsets, itertools.repeat(inst), itertools.repeat(union), firsts))
    else:
        results = []
        for first in firsts:
            results.append(_try_subsets(inst, union, first))
            if results[-1]:
                break
    found = next((h for h in results if h is not None), None)
    if found is None:
        found = _degenerate_fallback(inst, union)
    if found is None:
        raise OracleBugError("no ham-sandwich cut found; existence is guaranteed")
    return found


def _degenerate_fallback(inst: HamSandwichInstance, union) -> Optional[Hyperplane]:
    """Hyperplanes containing every point of a union that lies in a lower-dimensional flat."""
    n = inst.dimension
    base = union[0]
    rows = [[a - b for a, b in zip(p, base)] for p in union[1:]]
    for extra in itertools.combinations(range(n), n - 1):
        padded = rows + [[Fraction(int(c == e)) for c in range(n)] for e in extra]
        for subset in itertools.combinations(padded, n - 1):
            normal = _nullspace_vector(list(subset), n)
            if normal is None or any(sum(g * x for g, x in zip(normal, r)) != 0 for r in rows):
                continue
            offset = sum((g * x for g, x in zip(normal, base)), Fraction(0))
            h = Hyperplane.normalized(normal, offset)
            if find_side_assignment(inst, h) is not None:
                return h
    return None


# ============================================
# TUCKER
# ============================================

def _lex_positive_offsets(n: int) -> List[Tuple[int, ...]]:
    offsets = []
    for delta in itertools.product((-1, 0, 1), repeat=n):
        nonzero = [d for d in delta if d]
        if nonzero and nonzero[0] > 0:
            offsets.append(delta)
    return offsets


def complementary_pairs(labels: np.ndarray) -> List[Tuple[GridPoint, GridPoint]]:
    """Every complementary pair (p, q) with q = p + lex-positive offset, 1-based, sorted."""
    n = labels.ndim
    pairs = []
    for delta in _lex_positive_offsets(n):
        src = tuple(slice(max(0, -d), labels.shape[a] - max(0, d)) for a, d in enumerate(delta))
        dst = tuple(slice(max(0, d), labels.shape[a] - max(0, -d)) for a, d in enumerate(delta))
        hits = np.argwhere(labels[src] == -labels[dst])
        for idx in hits:
            p = tuple(int(i) + max(0, -d) + 1 for i, d in zip(idx, delta))
            q = tuple(c + d for c, d in zip(p, delta))
            pairs.append((p, q))
    pairs.sort()
    return pairs


def brute_force_tucker(inst: Union[TuckerGrid2D, TuckerGridND],
                       max_cells: Optional[int] = None) -> Tuple[GridPoint, GridPoint]:
    max_cells = config.BRUTE_FORCE_MAX_CELLS if max_cells is None else max_cells
    labels = inst.labels
    if labels.size > max_cells:
        raise SearchBoundError(f"{labels.size} cells exceed the bound of {max_cells}")
    best = None
    for delta in _lex_positive_offsets(labels.ndim):
        src = tuple(slice(max(0, -d), labels.shape[a] - max(0, d)) for a, d in enumerate(delta))
        dst = tuple(slice(max(0, d), labels.shape[a] - max(0, -d)) for a, d in enumerate(delta))
        hits = np.argwhere(labels[src] == -labels[dst])
        if len(hits):
            p = tuple(int(i) + max(0, -d) + 1 for i, d in zip(hits[0], delta))
            candidate = (p, tuple(c + d for c, d in zip(p, delta)))
            if best is None or candidate < best:
                best = candidate
    if best is None:
        raise OracleBugError("no complementary pair found; Tucker's lemma guarantees one")
    return best
