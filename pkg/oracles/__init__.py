"""
PPA Reductions Toolkit - Oracles Package
"""

from .verifiers import (
    DiscrepancyReport,
    eval_ch,
    balancing_cut,
    verify_necklace,
    find_side_assignment,
    verify_ham_sandwich,
    verify_tucker,
    verify_tucker2d,
    verify_nvhdt,
)
from .brute_force import (
    brute_force_necklace,
    brute_force_ham_sandwich,
    brute_force_tucker,
    complementary_pairs,
)

__all__ = [
    'DiscrepancyReport',
    'eval_ch',
    'balancing_cut',
    'verify_necklace',
    'find_side_assignment',
    'verify_ham_sandwich',
    'verify_tucker',
    'verify_tucker2d',
    'verify_nvhdt',
    'brute_force_necklace',
    'brute_force_ham_sandwich',
    'brute_force_tucker',
    'complementary_pairs',
]
