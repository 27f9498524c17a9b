"""
PPA Reductions Toolkit - Möbius-Simplex Package
"""

from .params import ReductionParams
from .transform import (
    SimplexPoint,
    TransformedPoint,
    origin,
    direction_vector,
    from_transformed,
    to_transformed,
)
from .metrics import metric_d, metric_dtilde
from .colouring import (
    RegionKind,
    RegionClass,
    ColourVector,
    BlanketState,
    EncoderSample,
    classify_region,
    colour_f,
    f_prime,
    borsuk_F,
    consistent_colour,
    blanket_active,
    blanket_state_from_cuts,
    encoder_sample_points,
)

__all__ = [
    'ReductionParams',
    'SimplexPoint',
    'TransformedPoint',
    'origin',
    'direction_vector',
    'from_transformed',
    'to_transformed',
    'metric_d',
    'metric_dtilde',
    'RegionKind',
    'RegionClass',
    'ColourVector',
    'BlanketState',
    'EncoderSample',
    'classify_region',
    'colour_f',
    'f_prime',
    'borsuk_F',
    'consistent_colour',
    'blanket_active',
    'blanket_state_from_cuts',
    'encoder_sample_points',
]
