"""Tokenizer of the circuit description language."""

import math
import re

from mzi.errno_ import MZE_LEXICAL
from mzi.error import CircuitError

TOKEN_NUMBER = 'number'
TOKEN_IMAGINARY = 'imaginary'
TOKEN_IDENT = 'identifier'
TOKEN_SYMBOL = 'symbol'
TOKEN_NEWLINE = 'end of line'
TOKEN_EOF = 'end of input'

SYMBOLS = '+-*/()='

_NUMBER = re.compile(r'(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?(?P<imaginary>i(?![A-Za-z0-9_]))?')
_IDENT = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')
_BLANK = re.compile(r'[ \t\r]+')


class Token(object):
    """Lexical unit with its 1-based position.

    Instance variables:
    kind -- one of the TOKEN_* constants.
    text -- source text of the token.
    value -- float for numbers and imaginary literals, the text otherwise.
    line -- 1-based line number.
    column -- 1-based column number.
    """

    def __init__(self, kind, text, line, column, value=None):
        """Constructor."""
        self.kind = kind
        self.text = text
        self.value = text if value is None else value
        self.line = line
        self.column = column

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} kind={2} text={3!r} line={4} column={5}>'.format(
            self.__class__.__module__, self.__class__.__name__, self.kind, self.text, self.line, self.column,
        )

    def describe(self):
        """Human readable rendering for error messages."""
        if self.kind in (TOKEN_NEWLINE, TOKEN_EOF):
            return self.kind
        return "'{0}'".format(self.text)


def _scan_line(text, line):
    tokens = list()
    position = 0
    while position < len(text):
        column = position + 1
        blank = _BLANK.match(text, position)
        if blank:
            position = blank.end()
            continue
        char = text[position]
        if char == '#':
            break
        number = _NUMBER.match(text, position)
        if number:
            literal = number.group(0)
            digits = literal[:-1] if number.group('imaginary') else literal
            value = float(digits)
            if not math.isfinite(value):
                raise CircuitError(MZE_LEXICAL, 'number {0} out of range'.format(digits), line, column)
            kind = TOKEN_IMAGINARY if number.group('imaginary') else TOKEN_NUMBER
            tokens.append(Token(kind, literal, line, column, value))
            position = number.end()
            continue
        ident = _IDENT.match(text, position)
        if ident:
            tokens.append(Token(TOKEN_IDENT, ident.group(0), line, column))
            position = ident.end()
            continue
        if char in SYMBOLS:
            tokens.append(Token(TOKEN_SYMBOL, char, line, column))
            position += 1
            continue
        raise CircuitError(MZE_LEXICAL, 'unexpected character {0!r}'.format(char), line, column)
    tokens.append(Token(TOKEN_NEWLINE, '\n', line, len(text) + 1))
    return tokens


def tokenize(text):
    """Split circuit source text into tokens.

    Every line ends with a TOKEN_NEWLINE token, the whole input with a TOKEN_EOF token. Comments and blanks are
    dropped.

    Positional arguments:
    text -- str, the decoded file contents.

    Returns:
    List of Token instances.
    """
    tokens = list()
    lines = text.split('\n')
    for number, line_text in enumerate(lines, 1):
        tokens.extend(_scan_line(line_text, number))
    last = len(lines)
    tokens.append(Token(TOKEN_EOF, '', last, len(lines[-1]) + 1))
    return tokens
