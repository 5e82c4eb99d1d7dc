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

import csv
import io
import json

import pytest

from symmconv.formatter.csv_ import CSVFormatter
from symmconv.formatter.human import HumanFormatter
from symmconv.formatter.json_ import JSONFormatter


@pytest.fixture()
def chain():
    return {
        'schema_version': 1,
        'command': 'verify',
        'config': {},
        'name': 'hh',
        'terms': [
            {'label': 'f(p-midpoint)', 'value': 4.0},
            {'label': 'weighted mean', 'value': 13 / 3},
            {'label': 'endpoint mean', 'value': 5.0}
        ],
        'margins': [1 / 3, 2 / 3],
        'holds': True,
        'converged': True,
        'tolerance': 1e-7,
        'witness': None,
        'details': {},
        'warnings': [],
        'error': None,
        'exit_code': 0,
        'timings_ms': None
    }


@pytest.fixture()
def corpus(chain):
    corpus = dict(chain)
    corpus.update(command='corpus', name='corpus', terms=[], margins=[],
                  rows=[{'fixture': 'a.yml', 'check': 'hh', 'expect': 'holds',
                         'outcome': 'holds', 'status': 'pass',
                         'converged': True}])
    return corpus


def test_csv__formatter(chain):
    f = CSVFormatter({'name': 'csv'})
    f_csv = f.write(data=chain)

    reader = csv.DictReader(io.StringIO(f_csv))
    assert f.mimetype == 'text/csv'
    assert reader.fieldnames == ['index', 'label', 'value', 'margin']

    rows = list(reader)
    assert len(rows) == 3
    assert rows[1]['label'] == 'weighted mean'
    assert rows[1]['value'] == repr(13 / 3)
    assert rows[0]['margin'] == repr(1 / 3)
    assert rows[2]['margin'] == ''


def test_csv__formatter_rows(corpus):
    f_csv = CSVFormatter({'name': 'csv'}).write(data=corpus)
    lines = f_csv.splitlines()
    assert lines[0] == 'fixture,check,expect,outcome,status,converged'
    assert lines[1] == 'a.yml,hh,holds,holds,pass,true'


def test_json__formatter(chain):
    f = JSONFormatter({'name': 'json', 'pretty': False})
    text = f.write(data=chain)
    assert text.endswith('}\n')
    assert '\n' not in text[:-1]
    assert json.loads(text) == chain


def test_human__formatter(chain, corpus):
    f = HumanFormatter({'name': 'human'})
    assert f.mimetype == 'text/plain'

    lines = f.write(data=chain).splitlines()
    assert lines[0] == 'verify hh: holds'
    assert lines[1].split()[0] == 'f(p-midpoint)'
    assert '(margin' in lines[1]

    chain.update(holds=False, converged=False,
                 witness={'x': 1.0, 'y': 2.0, 't': 0.5},
                 warnings=['hh did not converge'])
    text = f.write(data=chain)
    assert text.startswith('verify hh: FAILS (not converged)\n')
    assert 'witness: x=1.0, y=2.0, t=0.5' in text
    assert 'warning: hh did not converge' in text

    chain['error'] = {'type': 'DomainError', 'message': 'ln of -1'}
    assert f.write(data=chain) == \
        'verify hh: ERROR DomainError: ln of -1\n'

    text = f.write(data=corpus)
    assert text.startswith('corpus corpus: holds\n')
    assert 'a.yml' in text
