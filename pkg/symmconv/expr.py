# =================================================================
#
# Authors: The symmconv contributors
#
# Copyright (c) 2026 The symmconv contributors
#
# Permission is hereby granted, free of charge, to any person
# obtaining a copy of this software and associated documentation
# files (the "Software"), to deal in the Software without
# restriction, including without limitation the rights to use,
# copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following
# conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
# OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
# WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
#
# =================================================================

"""Parser and evaluator for univariate real function expressions

Grammar::

    expr   := term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*
    factor := ("-")? power
    power  := atom ("^" factor)?
    atom   := number | ident | ident "(" expr ("," expr)* ")" | "(" expr ")"

The variable is ``x``; every other identifier that is not a reserved
function name is a parameter bound at evaluation time.
"""

from dataclasses import dataclass
import logging
import re
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple, Union

import numpy as np

from symmconv.models import ParamBindings

LOGGER = logging.getLogger(__name__)

VARIABLE = 'x'

#: reserved function names and their arity
FUNCTIONS = {
    'ln': 1,
    'exp': 1,
    'sin': 1,
    'cos': 1,
    'abs': 1,
    'sqrt': 1,
    'pow': 2
}

#: an exponent closer than this to an integer is treated as that integer
INTEGER_TOLERANCE = 1e-12

_TOKEN_SPEC = [
    ('number', r'(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?'),
    ('ident', r'[A-Za-z][A-Za-z0-9_]*'),
    ('op', r'[-+*/^]'),
    ('lparen', r'\('),
    ('rparen', r'\)'),
    ('comma', r','),
    ('space', r'\s+')
]
_TOKEN_RE = re.compile('|'.join(f'(?P<{k}>{v})' for k, v in _TOKEN_SPEC))

Real = Union[float, np.ndarray]


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Variable:
    pass


@dataclass(frozen=True)
class Parameter:
    name: str


@dataclass(frozen=True)
class Negate:
    operand: 'Node'


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: 'Node'
    right: 'Node'


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple['Node', ...]


Node = Union[Number, Variable, Parameter, Negate, BinaryOp, Call]


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(source: str) -> List[Token]:
    """
    Split an expression into tokens

    :param source: expression text

    :returns: `list` of `Token`, terminated by an `eof` token
    """

    tokens = []
    pos = 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            raise ExpressionSyntaxError(
                f'unexpected character {source[pos]!r}',
                _byte_offset(source, pos),
                {'number', 'identifier', 'operator', '(', ')', ','})
        kind = match.lastgroup
        if kind != 'space':
            offset = _byte_offset(source, pos)
            if kind == 'number' and not np.isfinite(float(match.group())):
                raise ExpressionSyntaxError(
                    f'number {match.group()!r} out of range', offset,
                    {'number'})
            tokens.append(Token(kind, match.group(), offset))
        pos = match.end()

    tokens.append(Token('eof', '', _byte_offset(source, len(source))))
    return tokens


def _byte_offset(source: str, index: int) -> int:
    return len(source[:index].encode('utf-8'))


class _Parser:
    """recursive descent parser over the token list"""

    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def accept(self, kind: str, text: str = None) -> Optional[Token]:
        token = self.peek()
        if token.kind == kind and (text is None or token.text == text):
            return self.advance()
        return None

    def expect(self, kind: str, text: str, expected: set) -> Token:
        token = self.accept(kind, text)
        if token is None:
            self.fail(expected)
        return token

    def fail(self, expected: set, message: str = None):
        token = self.peek()
        found = token.text if token.kind != 'eof' else 'end of input'
        if message is None:
            message = f'unexpected {found!r}'
        raise ExpressionSyntaxError(message, token.offset, expected)

    def parse(self) -> Node:
        node = self.expr()
        if self.peek().kind != 'eof':
            self.fail({'+', '-', '*', '/', '^', 'end of input'})
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            token = self.peek()
            if token.kind == 'op' and token.text in '+-':
                self.advance()
                node = BinaryOp(token.text, node, self.term())
            else:
                return node

    def term(self) -> Node:
        node = self.factor()
        while True:
            token = self.peek()
            if token.kind == 'op' and token.text in '*/':
                self.advance()
                node = BinaryOp(token.text, node, self.factor())
            else:
                return node

    def factor(self) -> Node:
        if self.accept('op', '-'):
            return Negate(self.power())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.accept('op', '^'):
            # right-associative: the exponent is a full factor
            return BinaryOp('^', base, self.factor())
        return base

    def atom(self) -> Node:
        token = self.peek()

        if token.kind == 'number':
            self.advance()
            return Number(float(token.text))

        if token.kind == 'lparen':
            self.advance()
            node = self.expr()
            self.expect('rparen', ')', {')'})
            return node

        if token.kind == 'ident':
            self.advance()
            if self.peek().kind == 'lparen':
                return self.call(token)
            if token.text in FUNCTIONS:
                self.fail({'('}, f'function {token.text!r} requires arguments')
            if token.text == VARIABLE:
                return Variable()
            return Parameter(token.text)

        self.fail({'number', 'identifier', '(', '-'})

    def call(self, name: Token) -> Node:
        if name.text not in FUNCTIONS:
            raise UnknownFunctionError(name.text, name.offset)

        self.advance()
        args = [self.expr()]
        while self.accept('comma'):
            args.append(self.expr())
        self.expect('rparen', ')', {',', ')'})

        arity = FUNCTIONS[name.text]
        if len(args) != arity:
            raise ExpressionSyntaxError(
                f'{name.text} takes {arity} argument(s), got {len(args)}',
                name.offset, {f'{arity} argument(s)'})

        return Call(name.text, tuple(args))


def to_source(node: Node) -> str:
    """
    Pretty-print an expression node

    Binary operations are fully parenthesized, so the output parses back
    to a structurally identical tree.

    :param node: expression node

    :returns: `str` of expression text
    """

    if isinstance(node, Number):
        return repr(float(node.value))
    if isinstance(node, Variable):
        return VARIABLE
    if isinstance(node, Parameter):
        return node.name
    if isinstance(node, Negate):
        return f'(-{to_source(node.operand)})'
    if isinstance(node, BinaryOp):
        return f'({to_source(node.left)} {node.op} {to_source(node.right)})'
    if isinstance(node, Call):
        args = ', '.join(to_source(arg) for arg in node.args)
        return f'{node.name}({args})'

    raise TypeError(f'not an expression node: {node!r}')


def _parameters(node: Node) -> FrozenSet[str]:
    if isinstance(node, Parameter):
        return frozenset([node.name])
    if isinstance(node, Negate):
        return _parameters(node.operand)
    if isinstance(node, BinaryOp):
        return _parameters(node.left) | _parameters(node.right)
    if isinstance(node, Call):
        names = frozenset()
        for arg in node.args:
            names |= _parameters(arg)
        return names
    return frozenset()


class FuncExpr:
    """Parsed univariate real function, optionally carrying parameter
    bindings. Instances are immutable and callable on floats or numpy
    arrays."""

    def __init__(self, root: Node, source: str = None,
                 bindings: Mapping[str, float] = None):
        """
        Initialize object

        :param root: root expression node
        :param source: original text (pretty-printed when absent)
        :param bindings: parameter values used by `__call__`

        :returns: `symmconv.expr.FuncExpr`
        """

        self.root = root
        self.source = source if source is not None else to_source(root)
        self.bindings = dict(ParamBindings.coerce(bindings).values)
        self.parameters = _parameters(root)

    def bind(self, bindings: Mapping[str, float] = None,
             **params: float) -> 'FuncExpr':
        """
        Return a copy with additional parameter values

        :param bindings: `dict` of parameter values
        :param params: parameter values as keywords

        :returns: new `FuncExpr`
        """

        merged = dict(self.bindings)
        merged.update(bindings or {})
        merged.update(params)
        return FuncExpr(self.root, self.source, merged)

    def unbound(self) -> FrozenSet[str]:
        return self.parameters - set(self.bindings)

    def to_source(self) -> str:
        return to_source(self.root)

    def __call__(self, x: Real) -> Real:
        return evaluate(self, x)

    def __eq__(self, other):
        return isinstance(other, FuncExpr) and self.root == other.root

    def __hash__(self):
        return hash(self.root)

    def __repr__(self):
        return f'<FuncExpr> {self.source}'


def parse(source: str) -> FuncExpr:
    """
    Parse expression text

    :param source: expression text

    :returns: `FuncExpr`
    """

    if isinstance(source, bytes):
        source = source.decode('utf-8')

    LOGGER.debug(f'Parsing expression {source!r}')
    root = _Parser(source).parse()
    return FuncExpr(root, source)


def evaluate(f: FuncExpr, x: Real,
             bindings: Union[ParamBindings, Mapping[str, float]] = None
             ) -> Real:
    """
    Evaluate an expression

    :param f: `FuncExpr` to evaluate
    :param x: `float` or numpy array of points
    :param bindings: parameter values, merged over those bound on `f`

    :returns: `float` for scalar input, numpy array otherwise
    """

    env = dict(f.bindings)
    if bindings is not None:
        env.update(ParamBindings.coerce(bindings).values)

    scalar = np.ndim(x) == 0
    xs = np.asarray(x, dtype=float)

    with np.errstate(all='ignore'):
        value = _evaluate(f.root, xs, env, ())

    if scalar:
        return float(value)
    return np.array(np.broadcast_to(value, xs.shape), dtype=float)


def _evaluate(node: Node, x: np.ndarray, env: Dict[str, float],
              path: Tuple[str, ...]):

    if isinstance(node, Number):
        return node.value

    if isinstance(node, Variable):
        return x

    if isinstance(node, Parameter):
        try:
            return env[node.name]
        except KeyError:
            raise UnboundParameterError(node.name)

    if isinstance(node, Negate):
        return -_evaluate(node.operand, x, env, path + ('neg',))

    if isinstance(node, BinaryOp):
        left = _evaluate(node.left, x, env, path + ('left',))
        right = _evaluate(node.right, x, env, path + ('right',))
        if node.op == '+':
            value = left + right
        elif node.op == '-':
            value = left - right
        elif node.op == '*':
            value = left * right
        elif node.op == '/':
            _guard(np.asarray(right) == 0, 'division by zero',
                   node, x, path)
            value = np.divide(left, right)
        else:
            value = _power(left, right, node, x, path)
        _check_finite(value, node, x, path)
        return value

    args = [_evaluate(arg, x, env, path + (f'{node.name}[{i}]',))
            for i, arg in enumerate(node.args)]
    u = np.asarray(args[0], dtype=float)

    if node.name == 'ln':
        _guard(u <= 0, 'ln of non-positive value', node, x, path)
        value = np.log(u)
    elif node.name == 'sqrt':
        _guard(u < 0, 'sqrt of negative value', node, x, path)
        value = np.sqrt(u)
    elif node.name == 'exp':
        value = np.exp(u)
    elif node.name == 'sin':
        value = np.sin(u)
    elif node.name == 'cos':
        value = np.cos(u)
    elif node.name == 'abs':
        value = np.abs(u)
    else:
        value = _power(u, args[1], node, x, path)

    _check_finite(value, node, x, path)
    return value


def _power(base, exponent, node: Node, x: np.ndarray,
           path: Tuple[str, ...]):
    base = np.asarray(base, dtype=float)
    exponent = np.asarray(exponent, dtype=float)
    rounded = np.round(exponent)
    integral = np.abs(exponent - rounded) <= INTEGER_TOLERANCE

    _guard((base < 0) & ~integral,
           'negative base with non-integral exponent', node, x, path)
    _guard((base == 0) & (exponent < 0),
           'zero raised to a negative power', node, x, path)

    return np.power(base, np.where(integral, rounded, exponent))


def _guard(mask, message: str, node: Node, x: np.ndarray,
           path: Tuple[str, ...]):
    if np.any(mask):
        raise DomainError(message, _locate(mask, x), '/'.join(path) or '.',
                          to_source(node))


def _check_finite(value, node: Node, x: np.ndarray,
                  path: Tuple[str, ...]):
    finite = np.isfinite(value)
    if not np.all(finite):
        _guard(~finite, 'non-finite result', node, x, path)


def _locate(mask, x: np.ndarray) -> float:
    """first point of x at which mask holds"""

    mask = np.broadcast_to(mask, np.broadcast(mask, x).shape)
    xs = np.broadcast_to(x, mask.shape)
    return float(xs[mask].flat[0])


class ExpressionError(Exception):
    """expression generic error"""
    pass


class ExpressionSyntaxError(ExpressionError):
    """expression syntax error"""

    def __init__(self, message: str, offset: int, expected: set):
        self.offset = offset
        self.expected = frozenset(expected)
        expected_ = ', '.join(sorted(self.expected))
        super().__init__(
            f'{message} at byte {offset} (expected one of: {expected_})')


class UnknownFunctionError(ExpressionError):
    """unknown function name"""

    def __init__(self, name: str, offset: int):
        self.name = name
        self.offset = offset
        super().__init__(f'unknown function {name!r} at byte {offset}')


class EvaluationError(ExpressionError):
    """expression evaluation error"""
    pass


class UnboundParameterError(EvaluationError):
    """parameter without a value"""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f'parameter {name!r} is not bound')


class DomainError(EvaluationError):
    """evaluation outside the real domain"""

    def __init__(self, message: str, x: float, path: str, node: str):
        self.x = x
        self.path = path
        self.node = node
        super().__init__(f'{message} at x={x!r} in {node} (path {path})')
