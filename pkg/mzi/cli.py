"""Run interferometer circuit descriptions from the command line.

The run command parses a circuit file, sweeps it with the closed form engine, the dense Fock space oracle or both,
and writes CSV to stdout or to a file. The check command only parses and validates, then prints a summary table.

The default engine is read from the MZI_ENGINE environment variable like so:
    MZI_ENGINE=oracle mzi run circuits/singlet.mzi

Exit status is 0 on success, 1 for errors in the circuit file and 2 for engine or output errors.

Usage:
    mzi run <file> [--engine=ENGINE] [--output=PATH] [--jobs=N] [-v]
    mzi check <file> [-v]
    mzi -h | --help
    mzi --version

Options:
    -e --engine=ENGINE  closed, oracle or both. Defaults to MZI_ENGINE, else both.
    -j --jobs=N         Evaluate sweep points on N threads. [default: 1]
    -o --output=PATH    Write the CSV to PATH instead of stdout.
    -v --verbose        Print debug messages to stderr.
"""

import io
import logging
import signal
import sys

from docopt import docopt
from terminaltables import AsciiTable

from mzi import __version__, config
from mzi.circuit.csv_ import emit_csv
from mzi.circuit.parser import parse
from mzi.circuit.sweep import run_sweep
from mzi.errno_ import MZE_INVAL, MZE_LEXICAL
from mzi.error import CircuitError, exit_status, MziError

_LOGGER = logging.getLogger(__name__)


def error(message, code=1):
    """Write an error message to stderr and return the exit status."""
    sys.stderr.write('ERROR: {0}\n'.format(message))
    return code


def setup_logging():
    """Send all log records, from DEBUG up, to stderr."""
    fmt = 'DBG<0>%(pathname)s:%(lineno)d  %(funcName)s: %(message)s'

    handler_stderr = logging.StreamHandler(sys.stderr)
    handler_stderr.setFormatter(logging.Formatter(fmt))

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)
    root_logger.addHandler(handler_stderr)


def read_circuit(path):
    """Read and parse a UTF-8 circuit file.

    Positional arguments:
    path -- file path.

    Returns:
    CircuitSpec instance.
    """
    with io.open(path, 'rb') as handle:
        raw = handle.read()
    try:
        text = raw.decode('utf-8')
    except UnicodeDecodeError as exc:
        line = raw.count(b'\n', 0, exc.start) + 1
        column = exc.start - (raw.rfind(b'\n', 0, exc.start) + 1) + 1
        raise CircuitError(MZE_LEXICAL, 'invalid UTF-8 byte', line, column)
    return parse(text)


def summary_table(spec):
    """AsciiTable of a parsed circuit."""
    bs = spec.beamsplitter
    table_data = [
        ['Statement', 'Value'],
        ['source', spec.source],
        ['beamsplitter t', repr(bs.t)],
        ['beamsplitter r', repr(bs.r)],
        ['beamsplitter tp', repr(bs.tp)],
        ['beamsplitter rp', repr(bs.rp)],
        ['lossless', 'yes' if bs.is_lossless() else 'no'],
        ['symmetric', 'yes' if bs.is_symmetric() else 'no'],
    ]
    for dephase in spec.dephasers:
        table_data.append(['dephase', 'arm={0} spin={1} phi={2}'.format(dephase.arm, dephase.spin,
                                                                          dephase.phi.format())])
    table_data.append(['sweep', '{0} from {1} to {2}, {3} steps'.format(
        spec.sweep.variable, spec.sweep.start.format(), spec.sweep.stop.format(), spec.sweep.steps)])
    table_data.append(['detect', ', '.join(spec.detects) or '(none)'])
    return AsciiTable(table_data, 'circuit')


def command_run(options):
    """Parse, sweep and write CSV."""
    try:
        jobs = int(options['--jobs'])
    except ValueError:
        raise MziError(MZE_INVAL, '--jobs needs an integer, got {0!r}'.format(options['--jobs']))
    engine = (options['--engine'] or config.default_engine).lower()
    spec = read_circuit(options['<file>'])
    result = run_sweep(spec, engine=engine, jobs=jobs)
    if engine == config.ENGINE_BOTH:
        _LOGGER.debug('largest engine difference %.3g', result.max_difference())
    emit_csv(result, options['--output'] or sys.stdout)


def command_check(options):
    """Parse and validate, print the summary table."""
    spec = read_circuit(options['<file>'])
    sys.stdout.write(summary_table(spec).table + '\n')


def main(argv=None):
    """Main function called upon script execution.

    Keyword arguments:
    argv -- list of arguments, sys.argv[1:] if None.

    Returns:
    Exit status.
    """
    options = docopt(__doc__, argv=argv, version=__version__)
    signal.signal(signal.SIGINT, lambda *_: sys.exit(0))  # Properly handle Control+C
    if options['--verbose']:
        setup_logging()
    try:
        if options['run']:
            command_run(options)
        else:
            command_check(options)
    except CircuitError as exc:
        return error('{0}: {1}'.format(options['<file>'], exc))
    except MziError as exc:
        return error(exc.message, exit_status(exc.error))
    except (IOError, OSError) as exc:
        return error('cannot read {0}: {1}'.format(options['<file>'], exc.strerror or exc))
    return 0
