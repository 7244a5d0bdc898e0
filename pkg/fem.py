"""
QuadStokes entry point
Run with: python fem.py <command> [options]
"""

import sys

from core.experiments.cli import main

if __name__ == '__main__':
    sys.exit(main())
