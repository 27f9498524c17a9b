"""
PPA Reductions Toolkit - Command Line Package
"""

from .commands import COMMANDS, build_parser, run, main

__all__ = [
    'COMMANDS',
    'build_parser',
    'run',
    'main',
]
