"""
PPA Reductions Toolkit - Moment-Curve Embedding
Two-thief necklaces become ham-sandwich instances on the curve (a, a^2, ..., a^n) and back.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from config import get_logger
from numerics.errors import InstanceError, OracleBugError
from numerics.instances import HamSandwichInstance, Hyperplane, NecklaceInstance, NecklaceSplit
from numerics.rational import format_rational
from oracles.verifiers import SideAssignment, find_side_assignment, verify_ham_sandwich

logger = get_logger('Sandwich')


@dataclass(frozen=True)
class MomentEmbedding:
    """Bead j sits at curve parameter bead_positions[j] and becomes point `slots[j]` = (set, index)."""
    bead_positions: Tuple[Fraction, ...]
    dimension: int
    colours: Tuple[int, ...]

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.bead_positions, self.bead_positions[1:])):
            raise InstanceError("bead positions must be strictly increasing")
        if len(self.colours) != len(self.bead_positions):
            raise InstanceError("one colour per bead position")

    @property
    def slots(self) -> List[Tuple[int, int]]:
        seen = [0] * self.dimension
        slots = []
        for colour in self.colours:
            slots.append((colour - 1, seen[colour - 1]))
            seen[colour - 1] += 1
        return slots

    def curve_point(self, alpha: Fraction) -> Tuple[Fraction, ...]:
        return tuple(alpha ** e for e in range(1, self.dimension + 1))

    def instance(self) -> HamSandwichInstance:
        sets: List[List] = [[] for _ in range(self.dimension)]
        for alpha, colour in zip(self.bead_positions, self.colours):
            sets[colour - 1].append(self.curve_point(alpha))
        return HamSandwichInstance(self.dimension, tuple(tuple(s) for s in sets))

    def to_dict(self):
        return {
            'bead_positions': [format_rational(a) for a in self.bead_positions],
            'dimension': self.dimension,
            'colours': list(self.colours),
        }


def necklace_to_sandwich(inst: NecklaceInstance) -> Tuple[HamSandwichInstance, MomentEmbedding]:
    """Bead j of B goes to a_j = j/(B+1) on the moment curve, in the point set of its colour."""
    if inst.k != 2:
        raise InstanceError(f"the moment-curve embedding needs two thieves, got k={inst.k}")
    total = len(inst.beads)
    positions = tuple(Fraction(j, total + 1) for j in range(1, total + 1))
    embedding = MomentEmbedding(positions, inst.num_colours, inst.beads)
    return embedding.instance(), embedding


def sandwich_to_necklace_solution(embedding: MomentEmbedding, h: Hyperplane,
                                  side_assignment: Optional[SideAssignment] = None) -> NecklaceSplit:
    """
    Sign of h along the beads; each sign change is a cut. Positive pieces go to thief 0.
    Beads on h take their side from the assignment (computed if not given).
    """
    inst = embedding.instance()
    if side_assignment is None:
        side_assignment = find_side_assignment(inst, h)
        if side_assignment is None:
            raise InstanceError("hyperplane does not bisect every point set")
    if not verify_ham_sandwich(inst, h, side_assignment):
        raise InstanceError("hyperplane is not a ham-sandwich cut of the embedded instance")
    signs = []
    for alpha, slot in zip(embedding.bead_positions, embedding.slots):
        side = h.side(embedding.curve_point(alpha))
        signs.append(side or side_assignment[slot])
    cuts = tuple(j for j in range(1, len(signs)) if signs[j] != signs[j - 1])
    if len(cuts) > embedding.dimension:
        raise OracleBugError(f"{len(cuts)} sign changes along the curve exceed n={embedding.dimension}")
    starts = (0,) + cuts
    owners = tuple(0 if signs[s] > 0 else 1 for s in starts)
    logger.debug(f"back-mapped hyperplane to cuts {cuts}")
    return NecklaceSplit(cuts, owners)
