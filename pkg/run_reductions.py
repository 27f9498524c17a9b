"""
PPA Reductions Toolkit - CLI Runner
Usage: python run_reductions.py <verb> [subject] [options]
"""

import os
import sys

# Setup environment
os.environ.setdefault('BASE_DIR', os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.environ['BASE_DIR'])

from cli.commands import main

if __name__ == "__main__":
    main()
