"""
PPA Reductions Toolkit - Candidate Hyperplanes
The labelling of bisecting hyperplanes by gradient that makes ham sandwich a PPA search.
"""

from fractions import Fraction
from typing import Optional, Sequence, Tuple

import config
from numerics.errors import InstanceError
from numerics.instances import HamSandwichInstance, Hyperplane
from numerics.rational import as_rational


def _gradient(g: Sequence, granularity: Optional[int] = None) -> Tuple[Fraction, ...]:
    g = tuple(as_rational(c, 'gradient') for c in g)
    if all(c == 0 for c in g):
        raise InstanceError("gradient is the zero vector")
    if sum(abs(c) for c in g) != 1:
        raise InstanceError("gradient must have L1 norm exactly 1")
    if granularity is not None and any((c * granularity).denominator != 1 for c in g):
        raise InstanceError(f"gradient entries must be multiples of 1/{granularity}")
    return g


def find_bisecting_offset(inst: HamSandwichInstance, g: Sequence) -> Fraction:
    """Median of the projections <g, x> over the union (midpoint of the middle gap for even counts)."""
    g = _gradient(g)
    projections = sorted(sum((a * x for a, x in zip(g, p)), Fraction(0)) for p in inst.union())
    total = len(projections)
    if total == 0:
        raise InstanceError("ham sandwich instance has no points")
    if total % 2:
        return projections[total // 2]
    return (projections[total // 2 - 1] + projections[total // 2]) / 2


def candidate_hyperplane_label(inst: HamSandwichInstance, g: Sequence,
                               granularity: Optional[int] = None) -> int:
    """
    +i / -i for the set S_i most unevenly split by the bisecting hyperplane with gradient g,
    lowest i on ties. The positive side is {<g, x> > offset}, so g and -g see the same
    hyperplane with sides exchanged. Sides are oriented by g, not by a fixed reference point:
    a fixed point lies on the same side of the bisector for g and -g and would give both the
    same label. A hyperplane that splits every set evenly gets +1 for a
    lexicographically positive g and -1 otherwise.
    """
    granularity = config.GRADIENT_GRANULARITY if granularity is None else granularity
    g = _gradient(g, granularity)
    h = Hyperplane(g, find_bisecting_offset(inst, g))

    best_index, best_balance = 0, 0
    for i, points in enumerate(inst.point_sets):
        balance = sum(h.side(x) for x in points)
        if abs(balance) > abs(best_balance):
            best_index, best_balance = i, balance
    if best_balance == 0:
        first = next(c for c in g if c != 0)
        return 1 if first > 0 else -1
    return (best_index + 1) if best_balance > 0 else -(best_index + 1)
