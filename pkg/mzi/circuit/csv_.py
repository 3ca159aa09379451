"""CSV output of sweep results: header row, one row per sweep point, 17 significant digits, LF line endings."""

import csv
import io

from mzi.errno_ import MZE_OUTPUT
from mzi.error import MziError


def format_number(value):
    """17 significant digits, enough to read every float back bit for bit; nan for undefined phases."""
    return '{0:.17g}'.format(value)


def _write(result, stream):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow([result.variable] + result.labels)
    for row in result.rows:
        writer.writerow([format_number(v) for v in row])


def emit_csv(result, destination):
    """Write a SweepResult as CSV.

    Positional arguments:
    result -- SweepResult instance.
    destination -- file path, or an open text stream such as sys.stdout.
    """
    if hasattr(destination, 'write'):
        try:
            _write(result, destination)
        except (IOError, OSError) as exc:
            raise MziError(MZE_OUTPUT, 'cannot write CSV: {0}'.format(exc))
        return
    try:
        with io.open(destination, 'w', newline='', encoding='utf-8') as stream:
            _write(result, stream)
    except (IOError, OSError) as exc:
        raise MziError(MZE_OUTPUT, 'cannot write {0}: {1}'.format(destination, exc.strerror or exc))
