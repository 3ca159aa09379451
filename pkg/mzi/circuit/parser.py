"""Recursive descent parser of circuit descriptions, and the matching pretty printer.

Expressions:
    expression := term (('+' | '-') term)*
    term       := unary (('*' | '/') unary)*
    unary      := ('-' | '+') unary | primary
    primary    := number | imaginary | 'pi' | identifier | '(' expression ')'
"""

import logging
import math

import numpy as np

from mzi.circuit.lexer import (TOKEN_EOF, TOKEN_IDENT, TOKEN_IMAGINARY, TOKEN_NEWLINE, TOKEN_NUMBER, TOKEN_SYMBOL,
                               tokenize)
from mzi.errno_ import (MZE_BAD_SWEEP, MZE_DUPLICATE, MZE_INVAL, MZE_MISSING, MZE_SYNTAX, MZE_UNDEFINED_VARIABLE,
                        MZE_UNKNOWN_KEYWORD)
from mzi.error import CircuitError, MziError
from mzi.fock.density import SOURCES
from mzi.fock.interferometer import BeamSplitter, DephaserSettings
from mzi.fock.modes import ARM_A, ARM_B, ARMS, SPIN_DOWN, SPIN_UP

_LOGGER = logging.getLogger(__name__)

DETECT_RATE_DA = 'rate Da'
DETECT_RATE_DB = 'rate Db'
DETECT_COINCIDENCE = 'coincidence'
DETECT_PHASE = 'phase'
DETECTS = (DETECT_RATE_DA, DETECT_RATE_DB, DETECT_COINCIDENCE, DETECT_PHASE)

SPIN_BOTH = 'both'
DEPHASE_SPINS = (SPIN_UP, SPIN_DOWN, SPIN_BOTH)
SPLITTER_FLAGS = ('lossless', 'symmetric')
SPLITTER_KEYS = ('t', 'r', 'tp', 'rp')


class Node(object):
    """Base class of expression and statement nodes.

    Subclasses list their compared attributes in _fields; the source position is kept but not compared.
    """

    _fields = ()

    def __init__(self, *args, **kwargs):
        """Constructor."""
        self.line = kwargs.get('line')
        self.column = kwargs.get('column')
        for name, value in zip(self._fields, args):
            setattr(self, name, value)

    def __repr__(self):
        """repr() handler."""
        return '{0}({1})'.format(type(self).__name__, ', '.join(repr(getattr(self, n)) for n in self._fields))

    def __eq__(self, other):
        """Same type and same fields."""
        return type(self) is type(other) and all(getattr(self, n) == getattr(other, n) for n in self._fields)

    def __ne__(self, other):
        """Inverse of __eq__."""
        return not self.__eq__(other)

    def __hash__(self):
        """Hash of the fields."""
        return hash((type(self).__name__,) + tuple(getattr(self, n) for n in self._fields))

    def children(self):
        """Sub-expressions."""
        return [getattr(self, n) for n in self._fields if isinstance(getattr(self, n), Node)]

    def walk(self):
        """Yield this node and all nodes below it."""
        yield self
        for child in self.children():
            for node in child.walk():
                yield node


class Expression(Node):
    """Base class of expression nodes."""

    def evaluate(self, variables):
        """Value of the expression.

        Positional arguments:
        variables -- dictionary mapping variable names to floats.

        Returns:
        Float, or complex if the expression holds imaginary literals.
        """
        raise NotImplementedError

    def format(self):
        """Source text that parses back to an equal expression."""
        raise NotImplementedError


class Number(Expression):
    """Real literal."""

    _fields = ('value',)

    def evaluate(self, variables):
        """The literal."""
        return self.value

    def format(self):
        """repr() keeps all digits."""
        return repr(self.value)


class Imaginary(Expression):
    """Literal like 0.5i."""

    _fields = ('value',)

    def evaluate(self, variables):
        """Purely imaginary complex number."""
        return complex(0, self.value)

    def format(self):
        """Digits followed by i."""
        return '{0!r}i'.format(self.value)


class Pi(Expression):
    """The constant pi."""

    def evaluate(self, variables):
        """math.pi."""
        return math.pi

    def format(self):
        """pi."""
        return 'pi'


class Variable(Expression):
    """Reference to the sweep variable."""

    _fields = ('name',)

    def evaluate(self, variables):
        """Look the name up."""
        return variables[self.name]

    def format(self):
        """The name."""
        return self.name


class Unary(Expression):
    """Sign applied to an operand."""

    _fields = ('op', 'operand')

    def evaluate(self, variables):
        """Negated or unchanged operand."""
        value = self.operand.evaluate(variables)
        return -value if self.op == '-' else value

    def format(self):
        """Sign followed by the operand."""
        return '{0}{1}'.format(self.op, self.operand.format())


class Binary(Expression):
    """Arithmetic on two operands."""

    _fields = ('op', 'left', 'right')

    def evaluate(self, variables):
        """Apply the operator; division by zero raises MZE_INVAL."""
        left, right = self.left.evaluate(variables), self.right.evaluate(variables)
        if self.op == '+':
            return left + right
        if self.op == '-':
            return left - right
        if self.op == '*':
            return left * right
        if not right:
            raise MziError(MZE_INVAL, 'division by zero in expression {0}'.format(self.format()))
        return left / right

    def format(self):
        """Fully parenthesized."""
        return '({0} {1} {2})'.format(self.left.format(), self.op, self.right.format())


class Dephase(Node):
    """dephase statement; several statements for the same arm and spin add up."""

    _fields = ('arm', 'spin', 'phi')


class Sweep(Node):
    """sweep statement: steps equally spaced values from start to stop, both included."""

    _fields = ('variable', 'start', 'stop', 'steps')

    def values(self):
        """Ascending numpy array of the sweep values."""
        return np.linspace(self.start.evaluate(dict()), self.stop.evaluate(dict()), self.steps)


class CircuitSpec(object):
    """Validated circuit description.

    Instance variables:
    source -- one of mzi.fock.density.SOURCES.
    beamsplitter -- BeamSplitter instance.
    dephasers -- list of Dephase nodes.
    sweep -- Sweep node.
    detects -- list of DETECTS entries, in file order.
    """

    def __init__(self, source, beamsplitter, dephasers, sweep, detects):
        """Constructor."""
        self.source = source
        self.beamsplitter = beamsplitter
        self.dephasers = list(dephasers)
        self.sweep = sweep
        self.detects = list(detects)

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} source={2} sweep={3} detects={4}>'.format(
            self.__class__.__module__, self.__class__.__name__, self.source, self.sweep.variable, self.detects,
        )

    def __eq__(self, other):
        """Field by field comparison."""
        if not isinstance(other, CircuitSpec):
            return NotImplemented
        return ((self.source, self.beamsplitter, self.dephasers, self.sweep, self.detects) ==
                (other.source, other.beamsplitter, other.dephasers, other.sweep, other.detects))

    def __ne__(self, other):
        """Inverse of __eq__."""
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def dephasers_at(self, value):
        """DephaserSettings with the sweep variable set to value.

        Positional arguments:
        value -- float, the sweep point.

        Returns:
        DephaserSettings instance.
        """
        phases = dict(((arm, spin), 0.0) for arm in ARMS for spin in (SPIN_UP, SPIN_DOWN))
        variables = {self.sweep.variable: float(value)}
        for statement in self.dephasers:
            phi = statement.phi.evaluate(variables)
            spins = (SPIN_UP, SPIN_DOWN) if statement.spin == SPIN_BOTH else (statement.spin,)
            for spin in spins:
                phases[(statement.arm, spin)] += phi
        return DephaserSettings(phases[(ARM_A, SPIN_UP)], phases[(ARM_A, SPIN_DOWN)], phases[(ARM_B, SPIN_UP)],
                                phases[(ARM_B, SPIN_DOWN)])


class _Parser(object):
    """Single use recursive descent parser over a token list."""

    def __init__(self, tokens):
        """Constructor."""
        self.tokens = tokens
        self.position = 0
        self.statements = dict()  # Keyword to first token, for duplicate and missing checks.
        self.source = None
        self.beamsplitter = None
        self.dephasers = list()
        self.sweep = None
        self.detects = list()

    @property
    def current(self):
        return self.tokens[self.position]

    def advance(self):
        token = self.current
        if token.kind != TOKEN_EOF:
            self.position += 1
        return token

    def error(self, error_, message, token=None):
        token = token or self.current
        return CircuitError(error_, message, token.line, token.column)

    def accept(self, kind, text=None):
        token = self.current
        if token.kind == kind and (text is None or token.text == text):
            return self.advance()
        return None

    def expect(self, kind, text=None, what=None):
        token = self.accept(kind, text)
        if token is None:
            what = what or (repr(text) if text else kind)
            raise self.error(MZE_SYNTAX, 'expected {0}, found {1}'.format(what, self.current.describe()))
        return token

    def expect_choice(self, choices, what):
        token = self.expect(TOKEN_IDENT, what=what)
        if token.text not in choices:
            raise self.error(MZE_UNKNOWN_KEYWORD, 'unknown {0} {1!r}, expected one of: {2}'.format(
                what, token.text, ', '.join(choices)), token)
        return token.text

    # Expressions.

    def expression(self):
        node = self.term()
        while self.current.kind == TOKEN_SYMBOL and self.current.text in '+-':
            op = self.advance()
            node = Binary(op.text, node, self.term(), line=op.line, column=op.column)
        return node

    def term(self):
        node = self.unary()
        while self.current.kind == TOKEN_SYMBOL and self.current.text in '*/':
            op = self.advance()
            node = Binary(op.text, node, self.unary(), line=op.line, column=op.column)
        return node

    def unary(self):
        if self.current.kind == TOKEN_SYMBOL and self.current.text in '+-':
            op = self.advance()
            return Unary(op.text, self.unary(), line=op.line, column=op.column)
        return self.primary()

    def primary(self):
        token = self.current
        if self.accept(TOKEN_NUMBER):
            return Number(token.value, line=token.line, column=token.column)
        if self.accept(TOKEN_IMAGINARY):
            return Imaginary(token.value, line=token.line, column=token.column)
        if self.accept(TOKEN_IDENT):
            if token.text == 'pi':
                return Pi(line=token.line, column=token.column)
            return Variable(token.text, line=token.line, column=token.column)
        if self.accept(TOKEN_SYMBOL, '('):
            node = self.expression()
            self.expect(TOKEN_SYMBOL, ')')
            return node
        raise self.error(MZE_SYNTAX, 'expected an expression, found {0}'.format(token.describe()))

    def constant(self, node, real):
        """Evaluate an expression that may not reference any variable."""
        for child in node.walk():
            if isinstance(child, Variable):
                raise CircuitError(MZE_UNDEFINED_VARIABLE, 'variable {0!r} not allowed here'.format(child.name),
                                   child.line, child.column)
            if real and isinstance(child, Imaginary):
                raise CircuitError(MZE_SYNTAX, 'imaginary literal in a real expression', child.line, child.column)
        try:
            return node.evaluate(dict())
        except MziError as exc:
            raise CircuitError(MZE_SYNTAX, exc.message, node.line, node.column)

    # Statements.

    def once(self, keyword, token):
        if keyword in self.statements:
            first = self.statements[keyword]
            raise self.error(MZE_DUPLICATE, 'duplicate {0} statement, first given on line {1}'.format(
                keyword, first.line), token)
        self.statements[keyword] = token

    def key_value(self, keys, seen):
        key = self.current
        self.expect_choice(keys, 'parameter')
        if key.text in seen:
            raise self.error(MZE_DUPLICATE, 'parameter {0!r} given twice'.format(key.text), key)
        self.expect(TOKEN_SYMBOL, '=')
        return key

    def statement_source(self, keyword):
        self.once('source', keyword)
        self.source = self.expect_choice(SOURCES, 'source')

    def statement_beamsplitter(self, keyword):
        self.once('beamsplitter', keyword)
        values, flags = dict(), set()
        while self.current.kind == TOKEN_IDENT:
            if self.current.text in SPLITTER_FLAGS:
                flag = self.advance()
                if flag.text in flags:
                    raise self.error(MZE_DUPLICATE, 'flag {0!r} given twice'.format(flag.text), flag)
                flags.add(flag.text)
                continue
            key = self.key_value(SPLITTER_KEYS, values)
            values[key.text] = complex(self.constant(self.expression(), real=False))
        for required in ('t', 'r'):
            if required not in values:
                raise self.error(MZE_MISSING, 'beamsplitter needs {0}='.format(required), keyword)
        if ('tp' in values) != ('rp' in values):
            raise self.error(MZE_MISSING, 'tp= and rp= must be given together', keyword)
        try:
            self.beamsplitter = BeamSplitter(values['t'], values['r'], values.get('tp'), values.get('rp'),
                                             lossless='lossless' in flags, symmetric='symmetric' in flags)
        except MziError as exc:
            raise self.error(exc.error, exc.message, keyword)

    def statement_dephase(self, keyword):
        values = dict()
        while self.current.kind == TOKEN_IDENT:
            key = self.key_value(('arm', 'spin', 'phi'), values)
            if key.text == 'arm':
                values['arm'] = self.expect_choice(ARMS, 'arm')
            elif key.text == 'spin':
                values['spin'] = self.expect_choice(DEPHASE_SPINS, 'spin')
            else:
                values['phi'] = self.expression()
        for required in ('arm', 'spin', 'phi'):
            if required not in values:
                raise self.error(MZE_MISSING, 'dephase needs {0}='.format(required), keyword)
        self.dephasers.append(Dephase(values['arm'], values['spin'], values['phi'], line=keyword.line,
                                      column=keyword.column))

    def statement_sweep(self, keyword):
        self.once('sweep', keyword)
        name = self.expect(TOKEN_IDENT, what='sweep variable name')
        if name.text == 'pi':
            raise self.error(MZE_BAD_SWEEP, "'pi' cannot be a sweep variable", name)
        self.expect(TOKEN_IDENT, 'from')
        start_node = self.expression()
        self.expect(TOKEN_IDENT, 'to')
        stop_node = self.expression()
        self.expect(TOKEN_IDENT, 'steps')
        steps = self.expect(TOKEN_NUMBER, what='step count')
        if not steps.text.isdigit():
            raise self.error(MZE_BAD_SWEEP, 'step count must be an integer, got {0}'.format(steps.text), steps)
        start, stop = self.constant(start_node, real=True), self.constant(stop_node, real=True)
        if int(steps.text) < 1:
            raise self.error(MZE_BAD_SWEEP, 'a sweep needs at least one step', steps)
        if stop < start:
            raise self.error(MZE_BAD_SWEEP, 'sweep must be ascending, {0} > {1}'.format(start, stop), keyword)
        self.sweep = Sweep(name.text, start_node, stop_node, int(steps.text), line=keyword.line,
                           column=keyword.column)

    def statement_detect(self, keyword):
        first = self.current
        what = self.expect_choice(('rate', DETECT_COINCIDENCE, DETECT_PHASE), 'detect request')
        if what == 'rate':
            what = 'rate {0}'.format(self.expect_choice(('Da', 'Db'), 'detector'))
        if what in self.detects:
            raise self.error(MZE_DUPLICATE, 'duplicate detect {0!r}'.format(what), first)
        self.detects.append(what)

    def parse(self):
        handlers = dict(
            source=self.statement_source,
            beamsplitter=self.statement_beamsplitter,
            dephase=self.statement_dephase,
            sweep=self.statement_sweep,
            detect=self.statement_detect,
        )
        while self.current.kind != TOKEN_EOF:
            if self.accept(TOKEN_NEWLINE):
                continue
            keyword = self.expect(TOKEN_IDENT, what='statement')
            if keyword.text not in handlers:
                raise self.error(MZE_UNKNOWN_KEYWORD, 'unknown statement {0!r}'.format(keyword.text), keyword)
            handlers[keyword.text](keyword)
            if self.current.kind not in (TOKEN_NEWLINE, TOKEN_EOF):
                raise self.error(MZE_SYNTAX, 'expected end of line, found {0}'.format(self.current.describe()))

        for keyword in ('source', 'beamsplitter', 'sweep'):
            if keyword not in self.statements:
                raise self.error(MZE_MISSING, 'missing {0} statement'.format(keyword))
        for statement in self.dephasers:
            for node in statement.phi.walk():
                if isinstance(node, Variable) and node.name != self.sweep.variable:
                    raise CircuitError(MZE_UNDEFINED_VARIABLE, 'undefined variable {0!r}'.format(node.name),
                                       node.line, node.column)
                if isinstance(node, Imaginary):
                    raise CircuitError(MZE_SYNTAX, 'imaginary literal in a real expression', node.line,
                                       node.column)
        _LOGGER.debug('parsed circuit: source %s, %d dephasers, sweep %s over %d steps, detects %s', self.source,
                      len(self.dephasers), self.sweep.variable, self.sweep.steps, self.detects)
        return CircuitSpec(self.source, self.beamsplitter, self.dephasers, self.sweep, self.detects)


def parse(text):
    """Parse and validate a circuit description.

    Positional arguments:
    text -- str, the whole file.

    Returns:
    CircuitSpec instance. Raises CircuitError pointing at the offending line and column.
    """
    return _Parser(tokenize(text)).parse()


def _complex_literal(value):
    imaginary = repr(value.imag)
    if not imaginary.startswith('-'):
        imaginary = '+' + imaginary
    return '{0!r}{1}i'.format(value.real, imaginary)


def format_spec(spec):
    """Pretty print a CircuitSpec; parse(format_spec(spec)) == spec.

    Positional arguments:
    spec -- CircuitSpec instance.

    Returns:
    str, one statement per line, ending with a newline.
    """
    bs = spec.beamsplitter
    splitter = 'beamsplitter t={0} r={1} tp={2} rp={3}'.format(
        _complex_literal(bs.t), _complex_literal(bs.r), _complex_literal(bs.tp), _complex_literal(bs.rp))
    splitter += ''.join(' ' + f for f, on in zip(SPLITTER_FLAGS, (bs.lossless, bs.symmetric)) if on)
    lines = ['source {0}'.format(spec.source), splitter]
    lines.extend('dephase arm={0} spin={1} phi={2}'.format(d.arm, d.spin, d.phi.format()) for d in spec.dephasers)
    lines.append('sweep {0} from {1} to {2} steps {3}'.format(
        spec.sweep.variable, spec.sweep.start.format(), spec.sweep.stop.format(), spec.sweep.steps))
    lines.extend('detect {0}'.format(d) for d in spec.detects)
    return '\n'.join(lines) + '\n'
