"""
PPA Reductions Toolkit - Configuration
Environment-driven settings and tagged loggers shared by every package.
"""

import logging
import os
import sys

BASE_DIR = os.path.dirname(os.path.abspath(__file__))

# ============================================
# SETTINGS
# ============================================

LOG_LEVEL = os.getenv('REDUCTIONS_LOG_LEVEL', 'INFO').upper()

BRUTE_FORCE_MAX_BEADS = int(os.getenv('BRUTE_FORCE_MAX_BEADS', '24'))
BRUTE_FORCE_MAX_POINTS = int(os.getenv('BRUTE_FORCE_MAX_POINTS', '12'))
BRUTE_FORCE_MAX_DIMENSION = int(os.getenv('BRUTE_FORCE_MAX_DIMENSION', '3'))
BRUTE_FORCE_MAX_CELLS = int(os.getenv('BRUTE_FORCE_MAX_CELLS', '1000000'))

GRADIENT_GRANULARITY = int(os.getenv('GRADIENT_GRANULARITY', '64'))
FIXED_POINT_FRAC_BITS = int(os.getenv('FIXED_POINT_FRAC_BITS', '8'))
JOBS = int(os.getenv('REDUCTIONS_JOBS', '1'))

SERVICE_HOST = os.getenv('SERVICE_HOST', '0.0.0.0')
SERVICE_PORT = int(os.getenv('SERVICE_PORT', '8000'))


# ============================================
# LOGGING
# ============================================

_handler = None


def get_logger(tag: str) -> logging.Logger:
    """Logger printing `[Tag] message` lines to stderr."""
    global _handler
    if _handler is None:
        _handler = logging.StreamHandler(sys.stderr)
        _handler.setFormatter(logging.Formatter('[%(name)s] %(message)s'))
    logger = logging.getLogger(tag)
    if _handler not in logger.handlers:
        logger.addHandler(_handler)
        logger.setLevel(LOG_LEVEL)
        logger.propagate = False
    return logger
