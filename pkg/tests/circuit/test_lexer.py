"""Tests for mzi.circuit.lexer."""

import pytest

from mzi.circuit.lexer import (TOKEN_EOF, TOKEN_IDENT, TOKEN_IMAGINARY, TOKEN_NEWLINE, TOKEN_NUMBER, TOKEN_SYMBOL,
                               tokenize)
from mzi.errno_ import MZE_LEXICAL
from mzi.error import CircuitError


def kinds(text):
    """Token kinds without the trailing end of line and end of input."""
    return [t.kind for t in tokenize(text)[:-2]]


def test_statement():
    """Identifiers with positions, followed by end of line and end of input."""
    tokens = tokenize('source singlet')
    assert [TOKEN_IDENT, TOKEN_IDENT, TOKEN_NEWLINE, TOKEN_EOF] == [t.kind for t in tokens]
    assert ('singlet', 1, 8) == (tokens[1].text, tokens[1].line, tokens[1].column)
    assert (1, 15) == (tokens[2].line, tokens[2].column)


def test_numbers():
    """Integers, decimals and exponents are floats."""
    tokens = tokenize('1 2.5 .5 1.5e-3 7E2')[:-2]
    assert [TOKEN_NUMBER] * 5 == [t.kind for t in tokens]
    assert [1.0, 2.5, 0.5, 0.0015, 700.0] == [t.value for t in tokens]


def test_imaginary():
    """A trailing i makes an imaginary literal unless an identifier continues."""
    tokens = tokenize('0.5i 2i 3in')[:-2]
    assert [TOKEN_IMAGINARY, TOKEN_IMAGINARY, TOKEN_NUMBER, TOKEN_IDENT] == [t.kind for t in tokens]
    assert [0.5, 2.0, 3.0, 'in'] == [t.value for t in tokens]


def test_complex_literal():
    """RE+IMi is a number, a symbol and an imaginary literal."""
    assert [TOKEN_NUMBER, TOKEN_SYMBOL, TOKEN_IMAGINARY] == kinds('0.6+0.8i')
    assert [TOKEN_SYMBOL, TOKEN_NUMBER, TOKEN_SYMBOL, TOKEN_IMAGINARY] == kinds('-1-2i')


def test_symbols_and_blanks():
    """Tabs and carriage returns are blanks."""
    tokens = tokenize('phi=(2*pi)/3\t\r')[:-2]
    assert ['phi', '=', '(', '2', '*', 'pi', ')', '/', '3'] == [t.text for t in tokens]


def test_comments():
    """# runs to the end of the line."""
    tokens = tokenize('# header\ndetect phase # trailing\n')
    assert [TOKEN_NEWLINE, TOKEN_IDENT, TOKEN_IDENT, TOKEN_NEWLINE, TOKEN_NEWLINE, TOKEN_EOF] == [
        t.kind for t in tokens]
    assert (2, 1) == (tokens[1].line, tokens[1].column)
    assert 3 == tokens[-1].line


@pytest.mark.parametrize('text,line,column', [
    ('source $', 1, 8),
    ('detect phase\nsweep x from 0 to 1 steps 2 ;', 2, 29),
    ('phi=1e400', 1, 5),
])
def test_lexical_errors(text, line, column):
    """Unexpected characters and overflowing numbers point at their position."""
    with pytest.raises(CircuitError) as exc:
        tokenize(text)
    assert MZE_LEXICAL == exc.value.error
    assert (line, column) == (exc.value.line, exc.value.column)


def test_describe():
    """Error messages quote token text and name line ends."""
    tokens = tokenize('beamsplitter')
    assert "'beamsplitter'" == tokens[0].describe()
    assert 'end of line' == tokens[1].describe()
    assert 'end of input' == tokens[2].describe()
