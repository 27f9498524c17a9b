"""
PPA Reductions Toolkit - Snake Embedding Package
"""

from .padding import pad_to_multiple_of_3, pad_axis_to_seven, extend_to_strip
from .fold import fold_once
from .compose import FoldTrace, TraceStep, compose_folds, check_def34, pull_back_solution
from .cubelets import grid_to_cubelets, grid_to_cubelets_traced, nvhdt_solution_to_pair

__all__ = [
    'pad_to_multiple_of_3',
    'pad_axis_to_seven',
    'extend_to_strip',
    'fold_once',
    'FoldTrace',
    'TraceStep',
    'compose_folds',
    'check_def34',
    'pull_back_solution',
    'grid_to_cubelets',
    'grid_to_cubelets_traced',
    'nvhdt_solution_to_pair',
]
