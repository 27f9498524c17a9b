"""
PPA Reductions Toolkit - Reduction Parameters
The inverse-polynomial quantities shared by the geometry and the gadget construction.
"""

from dataclasses import dataclass
from fractions import Fraction

from config import FIXED_POINT_FRAC_BITS
from numerics.errors import ParameterError
from numerics.rational import as_rational, format_rational


@dataclass(frozen=True)
class ReductionParams:
    """
    n: dimension of the cube B (and number of coordinate-encoding cuts)
    delta_tiny: sensor spacing; p_huge = n / delta_tiny sensors per encoder
    delta_t: twisted-tunnel radius
    delta_w: Significant-Region radius
    p_large: blanket-sensor activation threshold (in comb blocks)
    p_c: number of circuit encoders
    frac_bits: fixed-point precision of the encoder arithmetic
    """
    n: int
    delta_tiny: Fraction
    delta_t: Fraction
    delta_w: Fraction
    p_large: int
    p_c: int
    frac_bits: int = FIXED_POINT_FRAC_BITS

    def __post_init__(self):
        for name in ('delta_tiny', 'delta_t', 'delta_w'):
            try:
                object.__setattr__(self, name, as_rational(getattr(self, name), name))
            except ValueError as e:
                raise ParameterError(str(e)) from e
        self.validate()

    @classmethod
    def for_dimension(cls, n: int, **overrides) -> 'ReductionParams':
        """Desk-scale defaults: delta_tiny = 1/(100 n^2), delta_t = 1/(10 n^2), delta_w = 1/(4n)."""
        if n < 2:
            raise ParameterError(f"dimension must be at least 2, got {n}")
        values = {
            'delta_tiny': Fraction(1, 100 * n * n),
            'delta_t': Fraction(1, 10 * n * n),
            'delta_w': Fraction(1, 4 * n),
            'p_c': 2 * n * n,
        }
        values.update(overrides)
        if values.get('p_large') is None:
            ratio = as_rational(values['delta_w'], 'delta_w') / as_rational(values['delta_tiny'], 'delta_tiny')
            values['p_large'] = int(2 * ratio)
        return cls(n=n, **values)

    @property
    def p_huge(self) -> int:
        return int(self.n / self.delta_tiny)

    @property
    def epsilon(self) -> Fraction:
        return self.delta_tiny / 10

    @property
    def kappa(self) -> Fraction:
        """Middle detector block weight of a blanket sensor."""
        return self.delta_tiny * self.p_large / 20

    @property
    def comb_blocks(self) -> int:
        """Comb blocks per blanket sensor over its length-2 window."""
        return int(2 / self.delta_tiny)

    @property
    def sensor_width(self) -> Fraction:
        return self.delta_tiny / self.p_c

    @property
    def axis_tube(self) -> Fraction:
        """Radius around the axis inside which the coordinate transform is trusted."""
        return Fraction(1, 10 * self.n * self.n)

    def shift(self, encoder: int) -> Fraction:
        """Sensor offset of encoder `encoder` (1-based)."""
        return (encoder - 1) * self.sensor_width

    def validate(self) -> None:
        if self.n < 2:
            raise ParameterError(f"dimension must be at least 2, got {self.n}")
        if not 0 < self.delta_tiny < self.delta_t < self.delta_w < Fraction(1, 2 * self.n):
            raise ParameterError(
                "need 0 < delta_tiny < delta_t < delta_w < 1/(2n), got "
                f"{self.delta_tiny}, {self.delta_t}, {self.delta_w}"
            )
        if (self.n / self.delta_tiny).denominator != 1:
            raise ParameterError(f"n / delta_tiny = {self.n / self.delta_tiny} is not an integer")
        if (2 / self.delta_tiny).denominator != 1:
            raise ParameterError("2 / delta_tiny must be an integer")
        if not 0 < self.p_large < self.p_huge:
            raise ParameterError(f"need 0 < p_large < p_huge = {self.p_huge}, got {self.p_large}")
        if self.p_large > self.comb_blocks:
            raise ParameterError(f"p_large = {self.p_large} exceeds the {self.comb_blocks} comb blocks")
        if self.kappa >= 1:
            raise ParameterError(f"kappa = {self.kappa} must be below 1")
        if self.p_c < 2 * self.n * self.n:
            raise ParameterError(f"need p_c >= 2 n^2 = {2 * self.n * self.n}, got {self.p_c}")
        if self.frac_bits < 1:
            raise ParameterError("frac_bits must be positive")

    def to_dict(self):
        return {
            'n': self.n,
            'delta_tiny': format_rational(self.delta_tiny),
            'delta_t': format_rational(self.delta_t),
            'delta_w': format_rational(self.delta_w),
            'p_large': self.p_large,
            'p_c': self.p_c,
            'frac_bits': self.frac_bits,
            'p_huge': self.p_huge,
            'epsilon': format_rational(self.epsilon),
            'kappa': format_rational(self.kappa),
        }
