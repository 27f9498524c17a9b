"""
PPA Reductions Toolkit - Solution Extraction
Maps an approximate consensus-halving solution of a constructed instance back to p_c points of B,
one per circuit encoder, and looks for two reliable encoders with opposite colours.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from config import get_logger
from mobius.colouring import RegionClass, RegionKind, classify_region, encoder_sample_points, tunnel_preimage
from mobius.params import ReductionParams
from mobius.transform import SimplexPoint, to_transformed
from numerics.errors import DomainError, ExtractionError
from numerics.measures import CHInstance, LabelledCutSet
from numerics.nvhdt import NVHDTInstance
from numerics.rational import as_rational, format_rational
from oracles.verifiers import eval_ch, verify_nvhdt

logger = get_logger('Extract')

Point = Tuple[Fraction, ...]


@dataclass
class ExtractionResult:
    points: List[Point]
    unreliable: List[int]
    stray_encoder: Optional[int]
    parity_flipped: List[bool]
    region: RegionClass
    pair: Optional[Tuple[int, int]]
    spread: Fraction
    delta: Fraction
    verified: bool

    def to_dict(self):
        return {
            'points': [[format_rational(x) for x in p] for p in self.points],
            'unreliable': self.unreliable,
            'stray_encoder': self.stray_encoder,
            'parity_flipped': self.parity_flipped,
            'region': self.region.to_dict(),
            'pair': list(self.pair) if self.pair else None,
            'spread': format_rational(self.spread),
            'delta': format_rational(self.delta),
            'verified': self.verified,
        }


def _clamp(point: Point) -> Point:
    return tuple(min(Fraction(1), max(Fraction(-1), x)) for x in point)


def _stray_encoder(ch: CHInstance, cuts: LabelledCutSet, params: ReductionParams) -> Optional[int]:
    """First encoder region holding more cuts than it has agents."""
    size = (ch.length - params.n) / params.p_c
    for i in range(1, params.p_c + 1):
        start = params.n + (i - 1) * size
        if len(cuts.cuts_in(start, start + size)) > size:
            return i
    return None


def extract_solution(inst: NVHDTInstance, ch: Optional[CHInstance], sol: LabelledCutSet,
                     params: ReductionParams, check_solution: bool = True,
                     delta: Optional[Fraction] = None) -> ExtractionResult:
    """
    Reads the c-e cuts, clamps every encoder's sample into the embedded cube and returns the
    p_c points. Encoders whose sensors were cut, or whose region holds a stray cut, are unreliable:
    they report the consensus point and are left out of the opposite-pair search.
    `verified` applies verify_nvhdt at delta, 1/(100n) unless given; spread is the observed
    L-infinity diameter of the points.
    """
    n = params.n
    if ch is not None and check_solution:
        report = eval_ch(ch, sol)
        if not report.is_epsilon_solution:
            raise ExtractionError(
                f"cuts are not an epsilon-solution: max discrepancy {format_rational(report.max_abs)}"
            )
    ce_cuts = [c for c in sol.cuts if c <= n]
    if len(ce_cuts) > n:
        raise ExtractionError(f"{len(ce_cuts)} cuts lie in the coordinate-encoding region")

    stray = _stray_encoder(ch, sol, params) if ch is not None else None
    parity_flipped = [stray is not None and i > stray for i in range(1, params.p_c + 1)]
    if stray is not None:
        logger.warning(f"a c-e cut strays into encoder {stray}; later encoders see flipped parity")

    try:
        consensus = to_transformed(SimplexPoint.from_cuts(ce_cuts, n), params)
    except DomainError as e:
        raise ExtractionError(f"c-e cuts do not define a transformed point: {e}") from e
    region = classify_region(consensus, params)
    if region.kind is RegionKind.OUTSIDE_SIGNIFICANT:
        raise ExtractionError("solution lies outside the Significant Region, which no genuine solution can")
    fallback = _clamp(tunnel_preimage(consensus, params))

    ce_labels = LabelledCutSet(tuple(ce_cuts))
    points: List[Point] = []
    unreliable: List[int] = []
    for sample in encoder_sample_points(ce_labels, params):
        if sample.encoder == stray or not sample.reliable:
            unreliable.append(sample.encoder)
            points.append(fallback)
            continue
        points.append(_clamp(tunnel_preimage(sample.transformed, params)))
    if unreliable:
        logger.warning(f"unreliable encoders: {unreliable}")

    reliable = [i for i in range(1, params.p_c + 1) if i not in unreliable]
    colours = {i: inst.colour_of_point(points[i - 1]) for i in reliable}
    pair = None
    for i, k in itertools.combinations(reliable, 2):
        if colours[i] == -colours[k]:
            pair = (i, k)
            break
    spread = max(
        (max(abs(a - b) for a, b in zip(p, q)) for p, q in itertools.combinations(points, 2)),
        default=Fraction(0),
    )
    delta = Fraction(1, 100 * n) if delta is None else as_rational(delta, 'delta')
    verified = verify_nvhdt(inst, points, params.p_c, delta=delta)
    if not verified and spread > delta:
        logger.warning(f"points spread {format_rational(spread)}, wider than {format_rational(delta)}")
    if pair is None:
        logger.warning("no two reliable encoders report opposite colours")
    else:
        logger.info(f"encoders {pair[0]} and {pair[1]} report colours {colours[pair[0]]} and {colours[pair[1]]}")
    return ExtractionResult(points, unreliable, stray, parity_flipped, region, pair, spread, delta, verified)
