"""Error Handling.

Human readable messages for mzi.errno_ codes, and the exceptions raised throughout the library.
"""

import mzi.errno_

errmsg = dict((i, '') for i in range(mzi.errno_.MZE_MAX + 1))
errmsg.update({
    mzi.errno_.MZE_SUCCESS: 'Success',
    mzi.errno_.MZE_FAILURE: 'Unspecific failure',
    mzi.errno_.MZE_INVAL: 'Invalid input data or parameter',
    mzi.errno_.MZE_NOT_NORMALIZED: 'State is not normalized',
    mzi.errno_.MZE_ACCURACY: 'Integration accuracy not reached',
    mzi.errno_.MZE_TOO_FEW_SAMPLES: 'Too few samples',
    mzi.errno_.MZE_NOT_INCREASING: 'Sample times are not strictly increasing',
    mzi.errno_.MZE_AMBIGUOUS_LIFT: 'Path too coarse for an unambiguous lift',
    mzi.errno_.MZE_NOT_CLOSED: 'Path is not closed',
    mzi.errno_.MZE_NOT_DENSITY: 'Matrix is not a density operator',
    mzi.errno_.MZE_UNSUPPORTED_SOURCE: 'Unsupported source',
    mzi.errno_.MZE_ASYMMETRIC: 'Beam splitter is not symmetric',
    mzi.errno_.MZE_NOT_LOSSLESS: 'Beam splitter is not lossless',
    mzi.errno_.MZE_LEXICAL: 'Lexical error',
    mzi.errno_.MZE_SYNTAX: 'Syntax error',
    mzi.errno_.MZE_UNKNOWN_KEYWORD: 'Unknown keyword',
    mzi.errno_.MZE_DUPLICATE: 'Duplicate statement',
    mzi.errno_.MZE_MISSING: 'Missing statement',
    mzi.errno_.MZE_UNDEFINED_VARIABLE: 'Undefined variable',
    mzi.errno_.MZE_BAD_SWEEP: 'Invalid sweep',
    mzi.errno_.MZE_ENGINE: 'Engine not applicable',
    mzi.errno_.MZE_OUTPUT: 'Output destination not writable',
})

_PARSE_ERRORS = frozenset((
    mzi.errno_.MZE_LEXICAL, mzi.errno_.MZE_SYNTAX, mzi.errno_.MZE_UNKNOWN_KEYWORD, mzi.errno_.MZE_DUPLICATE,
    mzi.errno_.MZE_MISSING, mzi.errno_.MZE_UNDEFINED_VARIABLE, mzi.errno_.MZE_BAD_SWEEP,
))


class MziError(Exception):
    """Base exception of the library.

    Instance variables:
    error -- integer code from mzi.errno_.
    message -- human readable description.
    """

    def __init__(self, error, message=None):
        """Constructor."""
        self.error = error
        self.message = message or errmsg[error]
        super(MziError, self).__init__(self.message)

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} error={2} message={3!r}>'.format(
            self.__class__.__module__, self.__class__.__name__, self.error, self.message,
        )


class CircuitError(MziError):
    """Raised while reading a circuit description. Always points at a position in the source text.

    Instance variables:
    line -- 1-based line number.
    column -- 1-based column number.
    """

    def __init__(self, error, message, line, column):
        """Constructor."""
        self.line = line
        self.column = column
        super(CircuitError, self).__init__(error, message)

    def __str__(self):
        """Deterministic 'line L, column C: message' rendering."""
        return 'line {0}, column {1}: {2}'.format(self.line, self.column, self.message)


class BUG(Exception):
    """Internal invariant violated. Should never happen."""

    pass


def exit_status(error_):
    """Map an error code to the CLI exit status.

    Positional arguments:
    error_ -- integer code from mzi.errno_.

    Returns:
    0 on success, 1 for parse/validation problems, 2 for everything the engines or the output raise.
    """
    if error_ == mzi.errno_.MZE_SUCCESS:
        return 0
    if error_ in _PARSE_ERRORS:
        return 1
    return 2
