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

import logging

from symmconv.formatter.base import BaseFormatter
from symmconv.util import canonicalize, format_float

LOGGER = logging.getLogger(__name__)


def _number(value) -> str:
    return 'n/a' if value is None else format_float(value)


class HumanFormatter(BaseFormatter):
    """plain text summary for terminals"""

    def __init__(self, formatter_def: dict):
        super().__init__({'name': 'human'})
        self.mimetype = 'text/plain'

    def write(self, options: dict = {}, data: dict = None) -> str:
        """
        Summarise a report envelope as text

        :param options: unused
        :param data: report envelope

        :returns: text ending in a newline
        """

        data = canonicalize(data)
        lines = []

        if data.get('error'):
            error = data['error']
            lines.append(f'{data["command"]} {data.get("name") or ""}: '
                         f'ERROR {error["type"]}: {error["message"]}')
            return '\n'.join(lines) + '\n'

        if data.get('holds') is None:
            status = 'done'
        else:
            status = 'holds' if data['holds'] else 'FAILS'
        if not data.get('converged', True):
            status += ' (not converged)'
        lines.append(f'{data["command"]} {data["name"]}: {status}')

        if data['command'] == 'corpus':
            lines.extend(self._matrix(data.get('rows') or []))
        else:
            lines.extend(self._terms(data))

        if data.get('witness'):
            witness = ', '.join(f'{k}={_number(v)}'
                                for k, v in data['witness'].items())
            lines.append(f'witness: {witness}')
        for warning in data.get('warnings') or []:
            lines.append(f'warning: {warning}')

        return '\n'.join(lines) + '\n'

    @staticmethod
    def _terms(data: dict) -> list:
        terms = data.get('terms') or []
        margins = data.get('margins') or []
        width = max([len(term['label']) for term in terms] + [0])
        lines = []
        for i, term in enumerate(terms):
            line = f'  {term["label"]:<{width}}  {_number(term["value"])}'
            if i < len(margins):
                line += f'  (margin {_number(margins[i])})'
            lines.append(line)
        return lines

    @staticmethod
    def _matrix(rows: list) -> list:
        if not rows:
            return ['  no fixtures']
        width = max(len(row['fixture']) for row in rows)
        lines = []
        for row in rows:
            lines.append(f'  {row["fixture"]:<{width}}  {row["check"]:<18} '
                         f'expect {row["expect"]:<5}  got {row["outcome"]:<5}'
                         f'  {row["status"].upper()}')
        return lines

    def __repr__(self):
        return f'<HumanFormatter> {self.name}'
