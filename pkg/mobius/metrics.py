"""
PPA Reductions Toolkit - Möbius-Simplex Metrics
Distances that honour the identified facets, in simplex and in transformed coordinates.
"""

from fractions import Fraction
from typing import Sequence

from mobius.transform import SimplexPoint, TransformedPoint
from numerics.errors import InstanceError


def _l1(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((abs(x - y) for x, y in zip(a, b)), Fraction(0))


def _detour(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    """
    Cheapest path x -> (0, z) ~ (z, 0) -> y.
    Each z_i costs |x_{i+1} - y_i| while it stays between them; any missing mass to reach
    sum(z) = 1 costs 2 per unit.
    """
    head = x[1:]
    tail = y[:-1]
    cost = x[0] + y[-1] + _l1(head, tail)
    reach = sum((max(a, b) for a, b in zip(head, tail)), Fraction(0))
    return cost + 2 * max(Fraction(0), 1 - reach)


def metric_d(x: SimplexPoint, y: SimplexPoint) -> Fraction:
    if x.n != y.n:
        raise InstanceError("points live in simplices of different dimension")
    return min(_l1(x.coords, y.coords), _detour(x.coords, y.coords), _detour(y.coords, x.coords))


def metric_dtilde(p: TransformedPoint, q: TransformedPoint) -> Fraction:
    """Direct distance, or through the (0; alpha) ~ (1; -alpha) seam in either direction."""
    if p.n != q.n:
        raise InstanceError("points have different numbers of transformed coordinates")
    direct = abs(p.tau - q.tau) + _l1(p.alphas, q.alphas)
    twisted = sum((abs(a + b) for a, b in zip(p.alphas, q.alphas)), Fraction(0))
    return min(direct, p.tau + (1 - q.tau) + twisted, (1 - p.tau) + q.tau + twisted)
