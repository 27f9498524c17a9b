"""
PPA Reductions Toolkit - Necklace and Ham Sandwich Package
"""

from .moment import MomentEmbedding, necklace_to_sandwich, sandwich_to_necklace_solution
from .candidates import find_bisecting_offset, candidate_hyperplane_label
from .thieves import solve_power_of_two

__all__ = [
    'MomentEmbedding',
    'necklace_to_sandwich',
    'sandwich_to_necklace_solution',
    'find_bisecting_offset',
    'candidate_hyperplane_label',
    'solve_power_of_two',
]
