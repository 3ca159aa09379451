#!/usr/bin/env python
"""Classify closed rotation paths into the two homotopy classes of SO(3).

Rotations are drawn as points of the ball of radius pi, antipodal surface points being the same rotation. A closed
path with an odd number of antipodal jumps cannot be shrunk to a point; its SU(2) lift ends on minus its start, which
is the sign picked up by a spin carried around it.

Debug messages are available with the -v option like so:
    example_homotopy_classes.py print -v

Usage:
    example_homotopy_classes.py print [-s SAMPLES] [-v]
    example_homotopy_classes.py -h | --help

Options:
    -s SAMPLES --samples=SAMPLES  Samples per leg or segment. [default: 33]
    -v --verbose                  Print debug messages to stderr.
"""

import logging
import math
import signal
import sys

from docopt import docopt
from terminaltables import AsciiTable

from mzi.cli import error, setup_logging
from mzi.so3 import classify, lift_path, path_from_rotation_schedule, path_from_waypoints

OPTIONS = docopt(__doc__) if __name__ == '__main__' else dict()
COLUMNS = ('Path', 'Samples', 'Jumps', 'Lift ends on', 'Class')
X, Z = (1, 0, 0), (0, 0, 1)
DIAGONAL = (3 ** -0.5, 3 ** -0.5, 3 ** -0.5)


def paths(samples):
    """Yield (name, So3Path) pairs."""
    yield 'no rotation', path_from_waypoints([(0, 0, 0), (0, 0, 0)], samples, closed=True)
    yield '2 pi about z', path_from_rotation_schedule([(Z, 2 * math.pi)], samples)
    yield '4 pi about z', path_from_rotation_schedule([(Z, 4 * math.pi)], samples)
    yield '2 pi about x + y + z', path_from_rotation_schedule([(DIAGONAL, 2 * math.pi)], samples)
    yield 'pi about x, then back', path_from_rotation_schedule([(X, math.pi), (X, -math.pi)], samples)
    yield 'two jumps through the surface', path_from_waypoints(
        [(0, 0, 0), (math.pi, 0, 0), (-math.pi, 0, 0), (0, 0, -math.pi), (0, 0, math.pi), (0, 0, 0)], samples)


def main():
    """Main function called upon script execution."""
    try:
        samples = int(OPTIONS['--samples'])
    except ValueError:
        return error('--samples needs an integer')
    table = AsciiTable([COLUMNS])
    for i in (1, 2):
        table.justify_columns[i] = 'right'
    for name, path in paths(samples):
        lift = lift_path(path)
        ends = '+start' if lift.endpoint_sign > 0 else '-start'
        table.table_data.append([name, str(len(path)), str(lift.jump_count), ends, classify(path)])
    print(table.table)


if __name__ == '__main__':
    signal.signal(signal.SIGINT, lambda *_: sys.exit(0))  # Properly handle Control+C
    if OPTIONS.get('--verbose'):
        setup_logging()
    else:
        logging.disable(logging.CRITICAL)
    sys.exit(main())
