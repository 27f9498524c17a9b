"""
PPA Reductions Toolkit - Instance Generators
Seeded random instances for the CLI `gen` verb and the property suites.
"""

from typing import Optional

import numpy as np

from numerics.errors import InstanceError
from numerics.instances import HamSandwichInstance, NecklaceInstance, TuckerGrid2D

TUCKER_2D_LABELS = np.array([-2, -1, 1, 2], dtype=np.int8)


def make_rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_tucker2d(m: int, rng: np.random.Generator) -> TuckerGrid2D:
    """Uniform labels inside; the left column and top row are drawn and mirrored antipodally."""
    if m < 2:
        raise InstanceError("an antipodal grid needs side at least 2")
    labels = rng.choice(TUCKER_2D_LABELS, size=(m, m))
    for i in range(m):
        labels[m - 1 - i, m - 1] = -labels[i, 0]
    for j in range(m):
        labels[m - 1, m - 1 - j] = -labels[0, j]
    return TuckerGrid2D(labels)


def random_necklace(num_colours: int, max_per_colour: int, rng: np.random.Generator, k: int = 2) -> NecklaceInstance:
    """Every colour appears a positive multiple of k times, at most max_per_colour times."""
    if max_per_colour < k:
        raise InstanceError(f"need room for at least {k} beads per colour")
    beads = []
    for colour in range(1, num_colours + 1):
        count = k * int(rng.integers(1, max_per_colour // k + 1))
        beads.extend([colour] * count)
    order = rng.permutation(len(beads))
    return NecklaceInstance(tuple(int(beads[i]) for i in order), k, num_colours)


def random_sandwich(dimension: int, points_per_set: int, rng: np.random.Generator,
                    bound: int = 20) -> HamSandwichInstance:
    """Integer points in [-bound, bound]^dimension, all distinct."""
    total = dimension * points_per_set
    if (2 * bound + 1) ** dimension < total:
        raise InstanceError("coordinate box too small for distinct points")
    seen = set()
    points = []
    while len(points) < total:
        p = tuple(int(x) for x in rng.integers(-bound, bound + 1, size=dimension))
        if p not in seen:
            seen.add(p)
            points.append(p)
    sets = [points[s * points_per_set:(s + 1) * points_per_set] for s in range(dimension)]
    return HamSandwichInstance.of(sets)
