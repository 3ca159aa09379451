#!/usr/bin/env python
"""Print the detector rates of an unpolarized spin-1/2 particle sent through a lossy Mach-Zehnder interferometer.

The beam splitter is chosen so that detector Da counts C - A cos(delta) cos(dphi) and detector Db counts
A (1 + cos(delta) cos(dphi)), where arm b shifts spin up by delta + dphi and spin down by delta - dphi. Each row
compares the closed form with the dense Fock space oracle.

Debug messages are available with the -v option like so:
    example_werner_fringes.py print -c 1 -a 0.5 -v

Usage:
    example_werner_fringes.py print [-c C] [-a A] [-d DELTA] [-n N] [-v]
    example_werner_fringes.py -h | --help

Options:
    -a A --amplitude=A  Fringe amplitude A, 0 <= A <= C. [default: 0.5]
    -c C --offset=C     Mean Da rate C. [default: 1]
    -d DELTA --delta=DELTA  Common phase offset of arm b. [default: 0.3]
    -n N --points=N     Number of dphi values between 0 and 2 pi. [default: 9]
    -v --verbose        Print debug messages to stderr.
"""

import logging
import signal
import sys

import numpy as np
from docopt import docopt
from terminaltables import AsciiTable

from mzi.cli import error, setup_logging
from mzi.error import MziError
from mzi.fock.closed_form import werner_dephasers, werner_rates, werner_splitter
from mzi.fock.density import build_source, SOURCE_UNPOLARIZED
from mzi.fock.interferometer import DETECTOR_A, DETECTOR_B, detector_rate

OPTIONS = docopt(__doc__) if __name__ == '__main__' else dict()
COLUMNS = ('dphi', 'N_Da', 'N_Db', 'N_Da oracle', 'N_Db oracle')


def rows(c, a, delta, points):
    """Yield one table row per dphi value."""
    bs = werner_splitter(c, a)
    rho = build_source(SOURCE_UNPOLARIZED)
    for dphi in np.linspace(0, 2 * np.pi, points):
        deph = werner_dephasers(delta, dphi)
        closed = werner_rates(c, a, delta, dphi)
        oracle = detector_rate(rho, bs, deph, DETECTOR_A), detector_rate(rho, bs, deph, DETECTOR_B)
        yield ['{0:.4f}'.format(dphi)] + ['{0:.6f}'.format(v) for v in closed + oracle]


def main():
    """Main function called upon script execution."""
    try:
        c, a = float(OPTIONS['--offset']), float(OPTIONS['--amplitude'])
        delta, points = float(OPTIONS['--delta']), int(OPTIONS['--points'])
    except ValueError as exc:
        return error(str(exc))
    try:
        table_data = list(rows(c, a, delta, points))
    except MziError as exc:
        return error(exc.message)
    table = AsciiTable([COLUMNS])
    for i in range(1, len(COLUMNS)):
        table.justify_columns[i] = 'right'
    table.table_data.extend(table_data)
    print(table.table)


if __name__ == '__main__':
    signal.signal(signal.SIGINT, lambda *_: sys.exit(0))  # Properly handle Control+C
    if OPTIONS.get('--verbose'):
        setup_logging()
    else:
        logging.disable(logging.CRITICAL)
    sys.exit(main())
