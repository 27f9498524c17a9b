"""
PPA Reductions Toolkit - Measures and Cuts
Piecewise-constant agent valuations, labelled cut sets and consensus-halving instances.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from numerics.errors import DomainError, InstanceError
from numerics.rational import as_rational

Block = Tuple[Fraction, Fraction, Fraction]


class Label(str, Enum):
    PLUS = 'A+'
    MINUS = 'A-'

    def flip(self) -> 'Label':
        return Label.MINUS if self is Label.PLUS else Label.PLUS


# ============================================
# STEP MEASURE
# ============================================

@dataclass(frozen=True)
class StepMeasure:
    """
    Density that is constant between consecutive breakpoints.
    values[k] is the density on the k-th interval of 0 < b_1 < ... < b_r < length.
    """
    length: Fraction
    breakpoints: Tuple[Fraction, ...]
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.length <= 0:
            raise InstanceError("measure domain length must be positive")
        if len(self.values) != len(self.breakpoints) + 1:
            raise InstanceError("need exactly one value per interval")
        previous = Fraction(0)
        for b in self.breakpoints:
            if not previous < b < self.length:
                raise InstanceError(f"breakpoint {b} not strictly ascending inside (0, {self.length})")
            previous = b
        if any(v < 0 for v in self.values):
            raise InstanceError("measure values must be non-negative")
        if self.total() != 1:
            raise InstanceError(f"measure integrates to {self.total()}, not 1")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Block], length) -> 'StepMeasure':
        """Build from disjoint uniform blocks (a, b, mass); adjacent blocks are allowed."""
        length = as_rational(length, 'length')
        ordered = sorted((as_rational(a), as_rational(b), as_rational(m)) for a, b, m in blocks)
        segments: List[Tuple[Fraction, Fraction, Fraction]] = []
        cursor = Fraction(0)
        for a, b, mass in ordered:
            if not 0 <= a < b <= length:
                raise DomainError(f"block [{a}, {b}] outside [0, {length}] or empty")
            if a < cursor:
                raise InstanceError(f"block [{a}, {b}] overlaps its predecessor")
            if mass <= 0:
                raise InstanceError("block mass must be positive")
            if a > cursor:
                segments.append((cursor, a, Fraction(0)))
            segments.append((a, b, mass / (b - a)))
            cursor = b
        if cursor < length:
            segments.append((cursor, length, Fraction(0)))
        merged = [segments[0]]
        for a, b, v in segments[1:]:
            if v == merged[-1][2]:
                merged[-1] = (merged[-1][0], b, v)
            else:
                merged.append((a, b, v))
        return cls(length, tuple(s[1] for s in merged[:-1]), tuple(s[2] for s in merged))

    @classmethod
    def uniform(cls, length) -> 'StepMeasure':
        length = as_rational(length, 'length')
        return cls(length, (), (1 / length,))

    def intervals(self) -> Iterator[Tuple[Fraction, Fraction, Fraction]]:
        """All (left, right, density) intervals, zero-density ones included."""
        edges = (Fraction(0),) + self.breakpoints + (self.length,)
        for k, v in enumerate(self.values):
            yield edges[k], edges[k + 1], v

    def blocks(self) -> Iterator[Block]:
        """Nonzero intervals as (left, right, mass)."""
        for a, b, v in self.intervals():
            if v:
                yield a, b, v * (b - a)

    def total(self) -> Fraction:
        return sum((m for _, _, m in self.blocks()), Fraction(0))

    def support(self) -> Tuple[Fraction, Fraction]:
        bl = list(self.blocks())
        return bl[0][0], bl[-1][1]

    def label_masses(self, cuts: Sequence[Fraction]) -> Tuple[Fraction, Fraction]:
        """(mass labelled A+, mass labelled A-) under alternating labels starting with A+."""
        plus = Fraction(0)
        minus = Fraction(0)
        for a, b, v in self.intervals():
            if not v:
                continue
            k = bisect_right(cuts, a)
            left = a
            for c in cuts[bisect_right(cuts, a):bisect_left(cuts, b)]:
                if k % 2 == 0:
                    plus += v * (c - left)
                else:
                    minus += v * (c - left)
                left = c
                k += 1
            if k % 2 == 0:
                plus += v * (b - left)
            else:
                minus += v * (b - left)
        return plus, minus

    def to_dict(self):
        from numerics.rational import format_rational
        return {
            'length': format_rational(self.length),
            'breakpoints': [format_rational(b) for b in self.breakpoints],
            'values': [format_rational(v) for v in self.values],
        }


def measure_integral(m: StepMeasure, a, b) -> Fraction:
    """Exact integral of the step function over [a, b]."""
    a = as_rational(a, 'a')
    b = as_rational(b, 'b')
    if not 0 <= a <= b <= m.length:
        raise DomainError(f"interval [{a}, {b}] outside [0, {m.length}]")
    total = Fraction(0)
    for left, right, v in m.intervals():
        if right <= a or not v:
            continue
        if left >= b:
            break
        total += v * (min(b, right) - max(a, left))
    return total


# ============================================
# CUTS AND INSTANCES
# ============================================

@dataclass(frozen=True)
class LabelledCutSet:
    """Ascending cuts; pieces alternate A+, A-, ... from the left."""
    cuts: Tuple[Fraction, ...]
    first_label: Label = Label.PLUS

    def __post_init__(self):
        if self.first_label is not Label.PLUS:
            raise InstanceError("leftmost piece is always labelled A+")
        for x, y in zip(self.cuts, self.cuts[1:]):
            if y < x:
                raise InstanceError("cuts must be ascending")

    @classmethod
    def of(cls, cuts: Iterable) -> 'LabelledCutSet':
        return cls(tuple(sorted(as_rational(c, 'cut') for c in cuts)))

    def label_at(self, x) -> Label:
        """Label of the piece containing x; a point on a cut belongs to the piece on its right."""
        k = bisect_right(self.cuts, as_rational(x))
        return Label.PLUS if k % 2 == 0 else Label.MINUS

    def label_of_interval(self, a, b) -> Optional[Label]:
        """Label of [a, b] if no cut lies strictly inside it, else None."""
        if any(a < c < b for c in self.cuts[bisect_right(self.cuts, a):bisect_left(self.cuts, b)]):
            return None
        return self.label_at(a)

    def cuts_in(self, a, b) -> Tuple[Fraction, ...]:
        """Cuts lying in the half-open range [a, b)."""
        return self.cuts[bisect_left(self.cuts, a):bisect_left(self.cuts, b)]

    def restricted(self, a, b) -> 'LabelledCutSet':
        return LabelledCutSet(self.cuts_in(a, b))


@dataclass(frozen=True)
class CHInstance:
    """Consensus-halving instance: one cut allowed per agent."""
    length: Fraction
    agents: Tuple[StepMeasure, ...]
    epsilon: Fraction
    ce_region_length: int
    agent_names: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.epsilon < 0:
            raise InstanceError("epsilon must be non-negative")
        if self.ce_region_length > self.length:
            raise InstanceError("coordinate-encoding region longer than the domain")
        for m in self.agents:
            if m.length != self.length:
                raise InstanceError("agent measure domain differs from the instance domain")
        if self.agent_names and len(self.agent_names) != len(self.agents):
            raise InstanceError("one name per agent")

    @property
    def num_agents(self) -> int:
        return len(self.agents)
