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
from pathlib import Path

import numpy as np
import pytest

from symmconv import util
from symmconv.models import Command, Interval
from symmconv.plugin import InvalidPluginError, load_plugin


def test_get_typed_value():
    value = util.get_typed_value('2')
    assert isinstance(value, int)

    value = util.get_typed_value('1.2')
    assert isinstance(value, float)

    value = util.get_typed_value('1e-8')
    assert value == 1e-8

    value = util.get_typed_value('1.c2')
    assert isinstance(value, str)

    value = util.get_typed_value('0.5')
    assert isinstance(value, float)

    value = util.get_typed_value('012')
    assert value == '012'


def test_canonicalize():
    data = util.canonicalize({
        'float': np.float64(0.25),
        'int': np.int64(3),
        'bool': np.bool_(True),
        'array': np.array([1.0, np.inf]),
        'nan': math.nan,
        'command': Command.VERIFY,
        'interval': Interval(a=1, b=2),
        'path': Path('fixtures'),
        'tuple': (1, 2)
    })
    assert data == {
        'float': 0.25,
        'int': 3,
        'bool': True,
        'array': [1.0, None],
        'nan': None,
        'command': 'verify',
        'interval': {'a': 1.0, 'b': 2.0},
        'path': 'fixtures',
        'tuple': [1, 2]
    }
    assert type(data['float']) is float
    assert type(data['int']) is int


def test_to_json():
    assert util.to_json({'a': math.inf, 'b': 0.1}) == '{"a": null, "b": 0.1}'
    assert util.to_json({'a': 1}, pretty=True) == '{\n    "a": 1\n}'
    assert util.to_json({'s': {'b', 'a'}}) == '{"s": ["a", "b"]}'

    with pytest.raises(TypeError):
        util.to_json({'o': object()})


def test_format_float():
    assert util.format_float(0.1) == '0.1'
    assert util.format_float(1) == '1.0'
    assert util.format_float(1 / 3) == '0.3333333333333333'
    assert util.format_float(math.inf) == 'inf'
    assert util.format_float(None) == ''


def test_load_plugin():
    formatter = load_plugin('formatter', {'name': 'csv'})
    assert formatter.mimetype == 'text/csv'

    processor = load_plugin('process', {'name': 'hh'})
    assert processor.name == 'hh'

    with pytest.raises(InvalidPluginError):
        load_plugin('provider', {'name': 'csv'})
    with pytest.raises(InvalidPluginError):
        load_plugin('process', {'name': 'nonsense'})
