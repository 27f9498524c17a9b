"""
PPA Reductions Toolkit - Möbius-Simplex Coordinates
Simplex points of cut gaps, transformed coordinates (tau; alpha_2..alpha_n) and the exact maps
between them.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from config import get_logger
from mobius.params import ReductionParams
from numerics.errors import DomainError, InstanceError
from numerics.rational import as_rational, format_rational

logger = get_logger('Mobius')

BISECTION_BITS = 256
RECONSTRUCT_EVERY = 8


# ============================================
# POINTS
# ============================================

@dataclass(frozen=True)
class SimplexPoint:
    """coords x_1..x_{n+1}: the gaps between consecutive c-e cuts, scaled to sum 1."""
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(as_rational(x, 'coordinate') for x in self.coords)
        object.__setattr__(self, 'coords', coords)
        if len(coords) < 3:
            raise InstanceError("a simplex point needs at least 3 coordinates")
        if any(x < 0 for x in coords):
            raise DomainError(f"negative simplex coordinate in {[format_rational(x) for x in coords]}")
        if sum(coords) != 1:
            raise DomainError(f"simplex coordinates sum to {sum(coords)}, not 1")

    @classmethod
    def of(cls, coords: Iterable) -> 'SimplexPoint':
        return cls(tuple(coords))

    @classmethod
    def from_cuts(cls, cuts: Iterable, n: int) -> 'SimplexPoint':
        """Gaps of at most n cuts in [0, n]; missing cuts sit at n."""
        cuts = sorted(as_rational(c, 'cut') for c in cuts)
        if len(cuts) > n or any(not 0 <= c <= n for c in cuts):
            raise DomainError(f"need at most {n} cuts inside [0, {n}]")
        cuts += [Fraction(n)] * (n - len(cuts))
        edges = [Fraction(0)] + cuts + [Fraction(n)]
        return cls(tuple((b - a) / n for a, b in zip(edges, edges[1:])))

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def cuts(self) -> Tuple[Fraction, ...]:
        """Cut positions in the c-e region [0, n]."""
        total = Fraction(0)
        out = []
        for x in self.coords[:-1]:
            total += x
            out.append(self.n * total)
        return tuple(out)

    def to_dict(self):
        return {'coords': [format_rational(x) for x in self.coords]}


@dataclass(frozen=True)
class TransformedPoint:
    """
    tau in [0, 1] and alphas = (alpha_2, ..., alpha_n).
    reliable is False when the source point lies outside the axis tube; exact is False when tau
    is only a dyadic approximation of an irrational root.
    """
    tau: Fraction
    alphas: Tuple[Fraction, ...]
    reliable: bool = True
    exact: bool = True

    def __post_init__(self):
        object.__setattr__(self, 'tau', as_rational(self.tau, 'tau'))
        object.__setattr__(self, 'alphas', tuple(as_rational(a, 'alpha') for a in self.alphas))
        if not 0 <= self.tau <= 1:
            raise DomainError(f"tau = {self.tau} outside [0, 1]")
        if not self.alphas:
            raise InstanceError("need at least alpha_2")

    @property
    def n(self) -> int:
        return len(self.alphas) + 1

    def alpha(self, j: int) -> Fraction:
        """alpha_j for 2 <= j <= n."""
        return self.alphas[j - 2]

    def seam_image(self) -> 'TransformedPoint':
        """(0; alpha) <-> (1; -alpha)."""
        if self.tau not in (0, 1):
            raise DomainError("only points with tau in {0, 1} have a seam image")
        return TransformedPoint(1 - self.tau, tuple(-a for a in self.alphas), self.reliable, self.exact)

    def to_dict(self):
        return {
            'tau': format_rational(self.tau),
            'alphas': [format_rational(a) for a in self.alphas],
            'reliable': self.reliable,
            'exact': self.exact,
        }


# ============================================
# DIRECTIONS AND FORWARD MAP
# ============================================

def origin(n: int, tau) -> Tuple[Fraction, ...]:
    """0_tau = (tau/n, 1/n, ..., 1/n, (1-tau)/n)."""
    tau = as_rational(tau, 'tau')
    return (tau / n,) + (Fraction(1, n),) * (n - 1) + ((1 - tau) / n,)


def direction_vector(n: int, tau, i: int) -> Tuple[Fraction, ...]:
    """d^tau_i: +1 at position i, -tau at i-1, -(1-tau) at i+1 (1-based); d^tau_{-i} = -d^tau_i."""
    if not 2 <= abs(i) <= n:
        raise DomainError(f"direction index {i} outside +-[2..{n}]")
    tau = as_rational(tau, 'tau')
    sign = 1 if i > 0 else -1
    k = abs(i)
    vec = [Fraction(0)] * (n + 1)
    vec[k - 2] = -tau * sign
    vec[k - 1] = Fraction(sign)
    vec[k] = -(1 - tau) * sign
    return tuple(vec)


def from_transformed(p: TransformedPoint, params: Optional[ReductionParams] = None) -> SimplexPoint:
    n = p.n
    if params is not None and params.n != n:
        raise InstanceError(f"point has dimension {n}, params have {params.n}")
    x = list(origin(n, p.tau))
    for j, a in enumerate(p.alphas, start=2):
        if a:
            for k, d in enumerate(direction_vector(n, p.tau, j)):
                x[k] += a * d
    if any(c < 0 for c in x):
        raise DomainError(f"({format_rational(p.tau)}; ...) maps outside the simplex")
    return SimplexPoint(tuple(x))


# ============================================
# INVERSE MAP
# ============================================

def _closing_value(tau: Fraction, prefix: List[Fraction], n: int) -> Fraction:
    """
    v_{n+1}(tau) with v_1 = 0 and v_{k+1} = tau^(k-1) ((k-1+tau)/n - S_k) + (1-tau) v_k.
    The forward recursion closes (alpha_{n+1} = 0) exactly at its roots.
    """
    v = Fraction(0)
    power = Fraction(1)
    for k in range(1, n + 1):
        v = power * (Fraction(k - 1) + tau) / n - power * prefix[k - 1] + (1 - tau) * v
        power *= tau
    return v


def _find_tau(x: SimplexPoint) -> Tuple[Fraction, bool]:
    n = x.n
    first, last = x.coords[0], x.coords[-1]
    if first == 0 and last == 0:
        raise DomainError("x_1 = x_{n+1} = 0: tau is undefined on this face")
    if first == 0:
        return Fraction(0), True
    if last == 0:
        return Fraction(1), True
    prefix = []
    total = Fraction(0)
    for c in x.coords[:-1]:
        total += c
        prefix.append(total)
    ratio = first / (first + last)
    if _closing_value(ratio, prefix, n) == 0:
        return ratio, True
    lo, hi = Fraction(0), Fraction(1)
    for step in range(1, BISECTION_BITS + 1):
        mid = (lo + hi) / 2
        value = _closing_value(mid, prefix, n)
        if value == 0:
            return mid, True
        if value < 0:
            lo = mid
        else:
            hi = mid
        if step % RECONSTRUCT_EVERY == 0:
            candidate = mid.limit_denominator(2 ** (step // 2))
            if lo <= candidate <= hi and _closing_value(candidate, prefix, n) == 0:
                return candidate, True
    logger.debug(f"no small-denominator root found, using dyadic tau {float(lo):.6g}")
    return (lo + hi) / 2, False


def to_transformed(x: SimplexPoint, params: Optional[ReductionParams] = None) -> TransformedPoint:
    """
    Exact (tau; alpha) with x = 0_tau + sum alpha_i d^tau_i.
    Case 1 (tau >= 1/2) runs the recursion forward from alpha_1 = 0, Case 2 backward from
    alpha_{n+1} = 0.
    """
    n = x.n
    if params is not None and params.n != n:
        raise InstanceError(f"point has dimension {n}, params have {params.n}")
    tau, exact = _find_tau(x)
    prefix = []
    total = Fraction(0)
    for c in x.coords[:-1]:
        total += c
        prefix.append(total)
    alphas = [Fraction(0)] * (n + 2)
    if tau >= Fraction(1, 2):
        for k in range(1, n):
            alphas[k + 1] = ((k - 1 + tau) / n + (1 - tau) * alphas[k] - prefix[k - 1]) / tau
    else:
        for k in range(n, 1, -1):
            alphas[k] = (prefix[k - 1] - (k - 1 + tau) / n + tau * alphas[k + 1]) / (1 - tau)
    tube = params.axis_tube if params is not None else Fraction(1, 10 * n * n)
    distance = sum((abs(a - b) for a, b in zip(x.coords, origin(n, tau))), Fraction(0))
    reliable = distance <= tube
    if not reliable:
        logger.warning(f"point is {float(distance):.4g} from the axis, beyond the {tube} tube")
    return TransformedPoint(tau, tuple(alphas[2:n + 1]), reliable, exact)
