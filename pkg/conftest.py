"""
PPA Reductions Toolkit - Shared Test Fixtures
"""

import os
import sys
from fractions import Fraction

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from mobius.params import ReductionParams
from numerics.instances import NecklaceInstance, TuckerGrid2D
from numerics.nvhdt import NVHDTInstance

TOY_GRID = [
    [1, 1, 2, -1],
    [1, 2, 2, -1],
    [1, -2, -2, -1],
    [1, -2, -1, -1],
]


def toy_colour_table() -> np.ndarray:
    """Rows below the middle are +2, above are -2; the middle row is +1 left of -1."""
    table = np.zeros((7, 7), dtype=np.int8)
    for a in range(7):
        for b in range(7):
            if b < 3:
                table[a, b] = 2
            elif b > 3:
                table[a, b] = -2
            else:
                table[a, b] = 1 if a <= 3 else -1
    return table


def antipodal_colour_table(n: int, seed: int) -> np.ndarray:
    """Random 7^n table with table[c] = -table[mirror(c)] everywhere but the centre cubelet."""
    rng = np.random.default_rng(seed)
    colours = np.array([c for c in range(-n, n + 1) if c], dtype=np.int8)
    half = (7 ** n) // 2
    values = rng.choice(colours, size=half)
    flat = np.concatenate([values, np.array([1], dtype=np.int8), -values[::-1]])
    return flat.reshape((7,) * n)


def small_reduction_params() -> ReductionParams:
    return ReductionParams.for_dimension(
        2,
        delta_tiny=Fraction(1, 200),
        delta_t=Fraction(1, 20),
        delta_w=Fraction(1, 5),
        p_large=40,
        p_c=8,
    )


@pytest.fixture
def small_params() -> ReductionParams:
    return small_reduction_params()


@pytest.fixture
def toy_grid() -> TuckerGrid2D:
    return TuckerGrid2D(np.array(TOY_GRID))


@pytest.fixture
def toy_nvhdt() -> NVHDTInstance:
    return NVHDTInstance.from_table(toy_colour_table())


@pytest.fixture
def small_necklace() -> NecklaceInstance:
    return NecklaceInstance((1, 2, 1, 3, 2, 3, 3, 1, 1, 3), 2, 3)
