"""
PPA Reductions Toolkit - Verifiers
Polynomial-time checks for every solution concept, plus exact balancing-cut solving.
"""

import itertools
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from config import get_logger
from numerics.errors import DomainError, InstanceError
from numerics.instances import (
    GridPoint,
    HamSandwichInstance,
    Hyperplane,
    NecklaceInstance,
    NecklaceSplit,
    TuckerGrid2D,
    TuckerGridND,
    check_point,
)
from numerics.measures import CHInstance, LabelledCutSet, StepMeasure
from numerics.nvhdt import NVHDTInstance
from numerics.rational import as_rational, format_rational

logger = get_logger('Verify')

SideAssignment = Dict[Tuple[int, int], int]


# ============================================
# CONSENSUS HALVING
# ============================================

@dataclass
class DiscrepancyReport:
    """d_i = mu_i(A+) - mu_i(A-) for every agent."""
    per_agent: List[Fraction]
    max_abs: Fraction
    is_epsilon_solution: bool

    def to_dict(self):
        return {
            'per_agent': [format_rational(d) for d in self.per_agent],
            'max_abs': format_rational(self.max_abs),
            'is_epsilon_solution': self.is_epsilon_solution,
        }


def eval_ch(inst: CHInstance, cuts: LabelledCutSet) -> DiscrepancyReport:
    if len(cuts.cuts) > inst.num_agents:
        raise InstanceError(f"{len(cuts.cuts)} cuts for {inst.num_agents} agents")
    for c in cuts.cuts:
        if not 0 <= c <= inst.length:
            raise DomainError(f"cut {c} outside [0, {inst.length}]")
    per_agent = []
    for measure in inst.agents:
        plus, minus = measure.label_masses(cuts.cuts)
        per_agent.append(plus - minus)
    max_abs = max((abs(d) for d in per_agent), default=Fraction(0))
    return DiscrepancyReport(per_agent, max_abs, max_abs <= inst.epsilon)


def balancing_cut(measure: StepMeasure, cuts: Sequence[Fraction], lo, hi,
                  presorted: bool = False) -> Optional[Fraction]:
    """
    Leftmost position c in [lo, hi] at which one extra cut zeroes the agent's discrepancy.
    `cuts` are the other agents' cuts and none may lie inside [lo, hi]; everything to the right
    of the new cut flips label. None when no position in [lo, hi] balances.
    """
    lo = as_rational(lo, 'lo')
    hi = as_rational(hi, 'hi')
    if not presorted:
        cuts = sorted(cuts)
    k = bisect_right(cuts, lo)
    if k < len(cuts) and cuts[k] < hi:
        raise InstanceError(f"another cut already lies inside [{lo}, {hi}]")
    outside = Fraction(0)
    inside: List[Tuple[Fraction, Fraction, Fraction]] = []
    for a, b, v in measure.intervals():
        if not v:
            continue
        for left, right in ((a, min(b, lo)), (max(a, hi), b)):
            if left >= right:
                continue
            plus, minus = _piece_masses(v, left, right, cuts)
            sign = 1 if right <= lo else -1
            outside += sign * (plus - minus)
        if max(a, lo) < min(b, hi):
            inside.append((max(a, lo), min(b, hi), v))
    s = 1 if k % 2 == 0 else -1
    total_inside = sum((v * (b - a) for a, b, v in inside), Fraction(0))
    # d(c) = outside + s * (2 F(c) - F(hi))
    target = (total_inside - s * outside) / 2
    if not 0 <= target <= total_inside:
        return None
    acc = Fraction(0)
    if target == 0:
        return lo
    for a, b, v in inside:
        mass = v * (b - a)
        if acc + mass >= target:
            return a + (target - acc) / v
        acc += mass
    return hi


def _piece_masses(v, left, right, cuts) -> Tuple[Fraction, Fraction]:
    plus = minus = Fraction(0)
    k = bisect_right(cuts, left)
    cursor = left
    for c in cuts[k:]:
        if c >= right:
            break
        if k % 2 == 0:
            plus += v * (c - cursor)
        else:
            minus += v * (c - cursor)
        cursor = c
        k += 1
    if k % 2 == 0:
        plus += v * (right - cursor)
    else:
        minus += v * (right - cursor)
    return plus, minus


# ============================================
# NECKLACE AND HAM SANDWICH
# ============================================

def verify_necklace(inst: NecklaceInstance, split: NecklaceSplit) -> bool:
    beads = len(inst.beads)
    previous = 0
    for g in split.cut_positions:
        if not previous < g < beads:
            raise InstanceError(f"cut gap {g} is out of order or outside 1..{beads - 1}")
        previous = g
    if any(not 0 <= owner < inst.k for owner in split.piece_owner):
        raise InstanceError("piece owner outside 0..k-1")
    if len(split.cut_positions) > inst.max_cuts:
        return False
    held = [[0] * (inst.num_colours + 1) for _ in range(inst.k)]
    for (start, stop), owner in zip(split.pieces(beads), split.piece_owner):
        for bead in inst.beads[start:stop]:
            held[owner][bead] += 1
    shares = inst.shares()
    return all(held[t][c] == shares[c] for t in range(inst.k) for c in shares)


def find_side_assignment(inst: HamSandwichInstance, h: Hyperplane) -> Optional[SideAssignment]:
    """Smallest-index-first positive assignment of on-plane points that bisects every set, if any."""
    assignment: SideAssignment = {}
    for s, points in enumerate(inst.point_sets):
        sides = [h.side(p) for p in points]
        positive = sides.count(1)
        on_plane = [k for k, side in enumerate(sides) if side == 0]
        low, high = len(points) // 2, (len(points) + 1) // 2
        needed = max(0, low - positive)
        if needed > len(on_plane) or positive + needed > high:
            return None
        for rank, k in enumerate(on_plane):
            assignment[(s, k)] = 1 if rank < needed else -1
    return assignment


def verify_ham_sandwich(inst: HamSandwichInstance, h: Hyperplane,
                        side_assignment_for_on_plane: SideAssignment) -> bool:
    on_plane = {(s, k) for s, points in enumerate(inst.point_sets)
                for k, p in enumerate(points) if h.side(p) == 0}
    for key, side in side_assignment_for_on_plane.items():
        if key not in on_plane:
            raise InstanceError(f"point {key} is not on the hyperplane")
        if side not in (1, -1):
            raise InstanceError("sides must be +1 or -1")
    missing = on_plane - set(side_assignment_for_on_plane)
    if missing:
        raise InstanceError(f"on-plane points without a side: {sorted(missing)}")
    for s, points in enumerate(inst.point_sets):
        positive = 0
        for k, p in enumerate(points):
            side = h.side(p) or side_assignment_for_on_plane[(s, k)]
            positive += side == 1
        if positive not in (len(points) // 2, (len(points) + 1) // 2):
            return False
    return True


# ============================================
# TUCKER
# ============================================

def verify_tucker(grid: Union[TuckerGrid2D, TuckerGridND], p1: GridPoint, p2: GridPoint) -> bool:
    check_point(grid.labels.shape, p1)
    check_point(grid.labels.shape, p2)
    if any(abs(a - b) > 1 for a, b in zip(p1, p2)):
        return False
    return grid.label(p1) == -grid.label(p2)


def verify_tucker2d(inst: TuckerGrid2D, p1: GridPoint, p2: GridPoint) -> bool:
    return verify_tucker(inst, p1, p2)


def verify_nvhdt(inst: NVHDTInstance, points: Sequence[Sequence], p_c: int,
                 delta: Optional[Fraction] = None) -> bool:
    """All points within delta of each other (L-infinity) and two of them oppositely coloured."""
    if len(points) != p_c:
        raise InstanceError(f"expected {p_c} points, got {len(points)}")
    delta = Fraction(1, 100 * inst.dimension) if delta is None else as_rational(delta, 'delta')
    pts = [tuple(as_rational(x) for x in p) for p in points]
    for p, q in itertools.combinations(pts, 2):
        if max(abs(a - b) for a, b in zip(p, q)) > delta:
            logger.debug(f"points {p} and {q} are further apart than {delta}")
            return False
    colours = {inst.colour_of_point(p) for p in pts}
    return any(-c in colours for c in colours)
