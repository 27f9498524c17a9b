"""
PPA Reductions Toolkit - Colouring the Möbius-Simplex
Region classification, the colouring f, its blanket-aware variant f', the averaged vector F and the
consistent-colour diagnostic. Also the sensor geometry every circuit encoder shares.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from config import get_logger
from mobius.params import ReductionParams
from mobius.transform import SimplexPoint, TransformedPoint, to_transformed
from numerics.errors import DomainError, InstanceError
from numerics.measures import Label, LabelledCutSet
from numerics.nvhdt import NVHDTInstance, symmetric_cubelet_of
from numerics.rational import format_rational

logger = get_logger('Mobius')


# ============================================
# REGIONS
# ============================================

class RegionKind(str, Enum):
    TWISTED_TUNNEL = 'twisted_tunnel'
    OUTER = 'outer'
    OUTSIDE_SIGNIFICANT = 'outside_significant'


@dataclass(frozen=True)
class RegionClass:
    kind: RegionKind
    colours: Tuple[int, ...] = ()

    def to_dict(self):
        return {'kind': self.kind.value, 'colours': list(self.colours)}


def outer_colours(p: TransformedPoint, params: ReductionParams) -> Tuple[int, ...]:
    """{-j : alpha_j > delta_t} and {j : alpha_j < -delta_t}, ordered by |j|."""
    colours = []
    for j in range(2, p.n + 1):
        a = p.alpha(j)
        if a > params.delta_t:
            colours.append(-j)
        elif a < -params.delta_t:
            colours.append(j)
    return tuple(colours)


def classify_region(p: TransformedPoint, params: ReductionParams) -> RegionClass:
    if p.n != params.n:
        raise InstanceError(f"point has dimension {p.n}, params have {params.n}")
    if all(abs(a) <= params.delta_t for a in p.alphas):
        return RegionClass(RegionKind.TWISTED_TUNNEL)
    colours = outer_colours(p, params)
    if all(abs(a) <= params.delta_w for a in p.alphas):
        return RegionClass(RegionKind.OUTER, colours)
    return RegionClass(RegionKind.OUTSIDE_SIGNIFICANT, colours)


# ============================================
# COLOUR VECTORS
# ============================================

@dataclass(frozen=True)
class ColourVector:
    entries: Tuple[int, ...]

    def __post_init__(self):
        if any(e not in (-1, 0, 1) for e in self.entries):
            raise InstanceError(f"colour vector entries must lie in {{-1, 0, 1}}: {self.entries}")

    @classmethod
    def unit(cls, n: int, colour: int) -> 'ColourVector':
        if not 1 <= abs(colour) <= n:
            raise DomainError(f"colour {colour} outside +-[{n}]")
        entries = [0] * n
        entries[abs(colour) - 1] = 1 if colour > 0 else -1
        return cls(tuple(entries))

    @classmethod
    def of_colours(cls, n: int, colours: Sequence[int]) -> 'ColourVector':
        entries = [0] * n
        for c in colours:
            entries[abs(c) - 1] = 1 if c > 0 else -1
        return cls(tuple(entries))

    def negated(self) -> 'ColourVector':
        return ColourVector(tuple(-e for e in self.entries))

    def colours(self) -> Tuple[int, ...]:
        return tuple((k + 1) * e for k, e in enumerate(self.entries) if e)

    def to_dict(self):
        return {'entries': list(self.entries)}


def tunnel_preimage(p: TransformedPoint, params: ReductionParams) -> Tuple[Fraction, ...]:
    """Point of B whose embedding is p, with tau clamped to the ends of the embedded cube."""
    half = Fraction(1, 2)
    tau = min(max(p.tau, half - params.delta_t), half + params.delta_t)
    return ((tau - half) / params.delta_t,) + tuple(a / params.delta_t for a in p.alphas)


def _tunnel_colour(p: TransformedPoint, inst: NVHDTInstance, params: ReductionParams) -> ColourVector:
    cubelet = symmetric_cubelet_of(tunnel_preimage(p, params))
    return ColourVector.unit(params.n, inst.colour_of_cubelet(cubelet))


def colour_f(p: TransformedPoint, inst: NVHDTInstance, params: ReductionParams) -> ColourVector:
    """
    Tunnel: the oracle colour of the (clamped) preimage in B, as a unit vector. Cubelet faces
    are resolved symmetrically, so the identified seam points (0; a) and (1; -a) get opposite colours.
    Outer regions: the signed sum over the outer colour set.
    """
    if inst.dimension != params.n:
        raise InstanceError(f"instance has dimension {inst.dimension}, params have {params.n}")
    region = classify_region(p, params)
    if region.kind is RegionKind.TWISTED_TUNNEL:
        return _tunnel_colour(p, inst, params)
    if region.kind is RegionKind.OUTER:
        return ColourVector.of_colours(params.n, region.colours)
    raise DomainError(f"point with tau = {format_rational(p.tau)} lies outside the Significant Region")


# ============================================
# BLANKET SENSORS
# ============================================

class BlanketState(str, Enum):
    INACTIVE = 'inactive'
    PLUS = 'A+'
    MINUS = 'A-'


def increasing_label(j: int) -> Label:
    """Label that grows in [|j|-2, |j|] when alpha_|j| moves in the direction of colour j."""
    grows_plus = abs(j) % 2 == 1
    if j < 0:
        grows_plus = not grows_plus
    return Label.PLUS if grows_plus else Label.MINUS


def override_entry(j: int, state: BlanketState) -> int:
    """Entry j of f' forced by an active blanket sensor: +1 toward A+ for odd j, toward A- for even j."""
    if state is BlanketState.INACTIVE:
        raise InstanceError("inactive blanket sensors force nothing")
    odd = j % 2 == 1
    return 1 if (state is BlanketState.PLUS) == odd else -1


def sensor_block(encoder: int, j: int, params: ReductionParams) -> Tuple[Fraction, Fraction]:
    """c-e block of sensor s_{encoder, j}, j in 1..p_huge."""
    if not 1 <= encoder <= params.p_c or not 1 <= j <= params.p_huge:
        raise DomainError(f"sensor ({encoder}, {j}) outside [{params.p_c}] x [{params.p_huge}]")
    left = (j - 1) * params.delta_tiny + params.shift(encoder)
    return left, left + params.sensor_width


def comb_blocks(encoder: int, j: int, params: ReductionParams) -> List[Tuple[Fraction, Fraction]]:
    """c-e comb of blanket sensor b_{encoder, j}: one thin block per delta_tiny over [j-2, j]."""
    if not 1 <= encoder <= params.p_c or not 2 <= j <= params.n:
        raise DomainError(f"blanket sensor ({encoder}, {j}) outside [{params.p_c}] x [2..{params.n}]")
    start = j - 2 + params.shift(encoder)
    return [
        (start + m * params.delta_tiny, start + m * params.delta_tiny + params.sensor_width)
        for m in range(params.comb_blocks)
    ]


def blanket_imbalance(cuts: LabelledCutSet, j: int, encoder: int, params: ReductionParams) -> int:
    """(comb blocks wholly A+) - (comb blocks wholly A-)."""
    balance = 0
    for a, b in comb_blocks(encoder, j, params):
        label = cuts.label_of_interval(a, b)
        if label is Label.PLUS:
            balance += 1
        elif label is Label.MINUS:
            balance -= 1
    return balance


def blanket_active(cuts: LabelledCutSet, j: int, encoder: int, params: ReductionParams) -> BlanketState:
    balance = blanket_imbalance(cuts, j, encoder, params)
    if balance >= params.p_large:
        return BlanketState.PLUS
    if balance <= -params.p_large:
        return BlanketState.MINUS
    return BlanketState.INACTIVE


def blanket_state_from_cuts(cuts: LabelledCutSet, params: ReductionParams,
                            encoder: int = 1) -> Tuple[BlanketState, ...]:
    """States of b_{encoder, 2..n}."""
    return tuple(blanket_active(cuts, j, encoder, params) for j in range(2, params.n + 1))


# ============================================
# f' AND F
# ============================================

def _base_vector(p: TransformedPoint, inst: NVHDTInstance, params: ReductionParams) -> ColourVector:
    region = classify_region(p, params)
    if region.kind is RegionKind.TWISTED_TUNNEL:
        return _tunnel_colour(p, inst, params)
    return ColourVector.of_colours(params.n, region.colours)


def f_prime(p: TransformedPoint, blanket_state: Sequence[BlanketState], inst: NVHDTInstance,
            params: ReductionParams, reference: bool = False) -> ColourVector:
    """
    f with active blanket sensors overriding their own entries.
    Entries of inactive sensors come from f, or from the outer colour set when p has left the
    Significant Region. `reference` is the encoder's reference-sensor bit: when it reads A-, the
    colour part is negated (the override is already physical and is not).
    """
    if len(blanket_state) != params.n - 1:
        raise InstanceError(f"need {params.n - 1} blanket states, got {len(blanket_state)}")
    base = _base_vector(p, inst, params)
    entries = list(base.negated().entries if reference else base.entries)
    for j, state in enumerate(blanket_state, start=2):
        if state is not BlanketState.INACTIVE:
            entries[j - 1] = override_entry(j, state)
    return ColourVector(tuple(entries))


@dataclass(frozen=True)
class EncoderSample:
    """What circuit encoder C_i reads from the c-e region."""
    encoder: int
    bits: Tuple[bool, ...]
    point: SimplexPoint
    transformed: Optional[TransformedPoint]
    reliable: bool
    reference: bool
    blanket: Tuple[BlanketState, ...]

    def to_dict(self):
        return {
            'encoder': self.encoder,
            'point': self.point.to_dict(),
            'transformed': self.transformed.to_dict() if self.transformed else None,
            'reliable': self.reliable,
            'reference': self.reference,
            'blanket': [s.value for s in self.blanket],
        }


def sensor_bits(cuts: LabelledCutSet, encoder: int, params: ReductionParams) -> Tuple[Tuple[bool, ...], bool]:
    """Bits [sensor block lies in an A- piece] and whether every block was uncut."""
    bits = []
    clean = True
    for j in range(1, params.p_huge + 1):
        a, b = sensor_block(encoder, j, params)
        label = cuts.label_of_interval(a, b)
        if label is None:
            clean = False
            label = cuts.label_at((a + b) / 2)
        bits.append(label is Label.MINUS)
    return tuple(bits), clean


def piece_counts(bits: Sequence[bool], n: int) -> Tuple[int, ...]:
    """Sensors per piece, from the first n label flips along the sensor row."""
    flips = [k for k, bit in enumerate(bits) if bit != (bits[k - 1] if k else False)][:n]
    flips += [len(bits)] * (n - len(flips))
    edges = [0] + flips + [len(bits)]
    return tuple(b - a for a, b in zip(edges, edges[1:]))


def encoder_sample_points(cuts: LabelledCutSet, params: ReductionParams) -> List[EncoderSample]:
    samples = []
    for i in range(1, params.p_c + 1):
        bits, clean = sensor_bits(cuts, i, params)
        counts = piece_counts(bits, params.n)
        point = SimplexPoint(tuple(Fraction(c, params.p_huge) for c in counts))
        try:
            transformed = to_transformed(point, params)
        except DomainError:
            transformed = None
        if not clean:
            logger.debug(f"encoder {i}: a cut splits one of its sensor blocks")
        samples.append(EncoderSample(
            encoder=i,
            bits=bits,
            point=point,
            transformed=transformed,
            reliable=clean and transformed is not None,
            reference=bits[0],
            blanket=blanket_state_from_cuts(cuts, params, i),
        ))
    return samples


def borsuk_F(x: SimplexPoint, inst: NVHDTInstance, params: ReductionParams) -> Tuple[Fraction, ...]:
    """Average of f' over the p_c points the shifted sensor rows report for the cuts of x."""
    if x.n != params.n:
        raise InstanceError(f"point has dimension {x.n}, params have {params.n}")
    cuts = LabelledCutSet.of(x.cuts())
    totals = [Fraction(0)] * params.n
    for sample in encoder_sample_points(cuts, params):
        if sample.transformed is None:
            continue
        vec = f_prime(sample.transformed, sample.blanket, inst, params, reference=sample.reference)
        for k, e in enumerate(vec.entries):
            totals[k] += e
    return tuple(t / params.p_c for t in totals)


# ============================================
# CONSISTENT COLOURS
# ============================================

def label_share(cuts: LabelledCutSet, a, b, label: Label) -> Fraction:
    """Fraction of [a, b] carrying `label`."""
    edges = [a] + [c for c in cuts.cuts if a < c < b] + [b]
    length = Fraction(0)
    for left, right in zip(edges, edges[1:]):
        if cuts.label_at(left) is label:
            length += right - left
    return length / (b - a)


def consistent_colour(p: TransformedPoint, labelling: LabelledCutSet, params: ReductionParams) -> Optional[int]:
    """
    First colour j in 2, -2, 3, -3, ... with alpha_|j| beyond 2 delta_t in j's direction and
    at least 1/2 - p_large/(2 p_huge) of [|j|-2, |j|] labelled with the label j increases.
    """
    floor_share = Fraction(1, 2) - Fraction(params.p_large, 2 * params.p_huge)
    for k in range(2, p.n + 1):
        for j in (k, -k):
            a = p.alpha(k)
            if not (a > 2 * params.delta_t if j > 0 else a < -2 * params.delta_t):
                continue
            if label_share(labelling, k - 2, k, increasing_label(j)) >= floor_share:
                return j
    return None
