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

import io
import logging

import unicodecsv as csv

from symmconv.formatter.base import BaseFormatter, FormatterSerializationError
from symmconv.util import canonicalize, format_float

LOGGER = logging.getLogger(__name__)

#: columns of a chain flattened to one row per term
TERM_FIELDS = ['index', 'label', 'value', 'margin']


def _cell(value):
    if isinstance(value, bool) or value is None:
        return '' if value is None else str(value).lower()
    if isinstance(value, float):
        return format_float(value)
    return value


class CSVFormatter(BaseFormatter):
    """CSV formatter"""

    def __init__(self, formatter_def: dict):
        """
        Initialize object

        :param formatter_def: formatter definition

        :returns: `symmconv.formatter.csv_.CSVFormatter`
        """

        super().__init__({'name': 'csv'})
        self.mimetype = 'text/csv'

    def write(self, options: dict = {}, data: dict = None) -> str:
        """
        Generate data in CSV format

        Reports with `rows` (transform curves, corpus results) are written
        row by row; any other report as one row per term with the margin
        to the next term.

        :param options: CSV formatting options
        :param data: report envelope

        :returns: string representation of format
        """

        data = canonicalize(data)
        rows = data.get('rows')
        if rows:
            fields = list(rows[0].keys())
        else:
            fields = TERM_FIELDS
            margins = data.get('margins') or []
            rows = []
            for i, term in enumerate(data.get('terms') or []):
                rows.append({
                    'index': i,
                    'label': term['label'],
                    'value': term['value'],
                    'margin': margins[i] if i < len(margins) else None
                })

        LOGGER.debug(f'CSV fields: {fields}')

        try:
            output = io.BytesIO()
            writer = csv.DictWriter(output, fields,
                                    lineterminator=options.get(
                                        'lineterminator', '\n'))
            writer.writeheader()

            for row in rows:
                writer.writerow({key: _cell(row.get(key)) for key in fields})
        except ValueError as err:
            LOGGER.error(err)
            raise FormatterSerializationError('Error writing CSV output')

        return output.getvalue().decode('utf-8')

    def __repr__(self):
        return f'<CSVFormatter> {self.name}'
