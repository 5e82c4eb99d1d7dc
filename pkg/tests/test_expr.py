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

import math

import numpy as np
import pytest

from symmconv.expr import (DomainError, ExpressionSyntaxError, FuncExpr,
                           UnboundParameterError, UnknownFunctionError,
                           evaluate, parse, to_source, tokenize)


def test_tokenize():
    tokens = tokenize('2*x + ln(a)')
    assert [t.kind for t in tokens] == ['number', 'op', 'ident', 'op',
                                        'ident', 'lparen', 'ident', 'rparen',
                                        'eof']
    assert tokens[3].offset == 4
    assert tokens[-1].offset == 11


def test_evaluate_scalar():
    assert parse('x^2')(3.0) == 9.0
    assert parse('-x^2')(3.0) == -9.0
    assert parse('2^3^2')(1.0) == 512.0
    assert parse('(2^3)^2')(1.0) == 64.0
    assert parse('pow(x, 2)')(3.0) == 9.0
    assert parse('1 - 2 - 3')(0.0) == -4.0
    assert parse('8 / 4 / 2')(0.0) == 1.0
    assert parse('ln(exp(x))')(1.5) == pytest.approx(1.5)
    assert parse('sqrt(x) + abs(-x)')(4.0) == 6.0
    assert parse('sin(x)^2 + cos(x)^2')(0.7) == pytest.approx(1.0)
    assert parse('1.5e1')(0.0) == 15.0
    assert isinstance(parse('x')(2.0), float)


def test_evaluate_vectorised():
    f = parse('2*x + 1')
    values = f(np.array([0.0, 1.0, 2.5]))
    assert isinstance(values, np.ndarray)
    assert values.tolist() == [1.0, 3.0, 6.0]

    constant = parse('1')
    assert constant(np.linspace(1, 2, 4)).shape == (4,)


def test_negative_base_integral_exponent():
    assert parse('x^2')(-2.0) == 4.0
    assert parse('x^3')(-2.0) == -8.0
    assert parse('x^p').bind(p=2.0 + 1e-14)(-3.0) == pytest.approx(9.0)


def test_parameters():
    f = parse('a*x + b')
    assert f.parameters == {'a', 'b'}
    assert f.unbound() == {'a', 'b'}

    with pytest.raises(UnboundParameterError) as error:
        f(1.0)
    assert error.value.name in ('a', 'b')

    g = f.bind(a=2.0, b=1.0)
    assert g.unbound() == set()
    assert g(3.0) == 7.0
    assert evaluate(f, 3.0, {'a': 1.0, 'b': 0.0}) == 3.0
    assert evaluate(g, 3.0, {'b': 4.0}) == 10.0

    # binding leaves the original untouched
    assert f.bindings == {}


def test_invalid_parameter_name():
    with pytest.raises(ValueError):
        parse('a*x').bind(x=1.0)


def test_syntax_errors():
    with pytest.raises(ExpressionSyntaxError) as error:
        parse('x +')
    assert error.value.offset == 3

    with pytest.raises(ExpressionSyntaxError) as error:
        parse('(x')
    assert ')' in error.value.expected

    with pytest.raises(ExpressionSyntaxError) as error:
        parse('x $ 2')
    assert error.value.offset == 2

    with pytest.raises(ExpressionSyntaxError):
        parse('ln x')

    with pytest.raises(ExpressionSyntaxError):
        parse('pow(x)')

    with pytest.raises(ExpressionSyntaxError):
        parse('x x')

    with pytest.raises(ExpressionSyntaxError):
        parse('')


def test_syntax_error_byte_offset():
    with pytest.raises(ExpressionSyntaxError) as error:
        parse('x + é')
    assert error.value.offset == 4

    with pytest.raises(ExpressionSyntaxError) as error:
        parse('éé + x')
    assert error.value.offset == 0

    with pytest.raises(ExpressionSyntaxError) as error:
        parse('x + é $')
    assert error.value.offset == 4


@pytest.mark.parametrize('source,offset', [
    ('1e999', 0),
    ('x + 1e999', 4),
    ('2*1e400', 2),
    ('(x, 1.5e309)', 4),
])
def test_non_finite_literal(source, offset):
    with pytest.raises(ExpressionSyntaxError) as error:
        tokenize(source)
    assert error.value.offset == offset
    assert 'number' in error.value.expected

    with pytest.raises(ExpressionSyntaxError):
        parse(source)


def test_large_finite_literal():
    f = parse('1e308*x')
    assert f(1.0) == 1e308
    assert parse(f.to_source()).to_source() == f.to_source()


def test_unknown_function():
    with pytest.raises(UnknownFunctionError) as error:
        parse('1 + foo(x)')
    assert error.value.name == 'foo'
    assert error.value.offset == 4


def test_domain_errors():
    with pytest.raises(DomainError) as error:
        parse('ln(x)')(-1.0)
    assert error.value.x == -1.0
    assert 'ln' in error.value.node

    with pytest.raises(DomainError):
        parse('x^0.5')(-4.0)

    with pytest.raises(DomainError) as error:
        parse('1/x')(np.array([1.0, 0.0, 2.0]))
    assert error.value.x == 0.0

    with pytest.raises(DomainError):
        parse('sqrt(x - 2)')(1.0)

    with pytest.raises(DomainError):
        parse('0^(-1)')(1.0)

    with pytest.raises(DomainError):
        parse('exp(x)')(1000.0)

    assert parse('x^0.5')(0.0) == 0.0


def test_to_source():
    for source in ('x^2', '-x^2 + 3*x', '2^3^2', 'ln(a*x) / pow(x, 2)',
                   '4*(x^p - (a^p + b^p)/2)^3'):
        f = parse(source)
        again = parse(to_source(f.root))
        assert again == f
        assert again.to_source() == f.to_source()


def test_funcexpr_repr_and_hash():
    f = parse('x^2')
    assert repr(f) == '<FuncExpr> x^2'
    assert hash(f) == hash(parse('x ^ 2'))
    assert isinstance(f.bind(), FuncExpr)


def test_bytes_source():
    assert parse(b'x + 1')(1.0) == 2.0


def test_non_finite_guard():
    with pytest.raises(DomainError):
        parse('exp(exp(x))')(10.0)
    assert math.isfinite(parse('exp(x)')(700.0))
