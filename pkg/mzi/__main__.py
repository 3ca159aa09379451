"""Allow running the command line interface with python -m mzi."""

import sys

from mzi.cli import main

if __name__ == '__main__':
    sys.exit(main())
