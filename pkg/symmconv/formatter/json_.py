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

from symmconv.formatter.base import BaseFormatter, FormatterSerializationError
from symmconv.util import to_json

LOGGER = logging.getLogger(__name__)


class JSONFormatter(BaseFormatter):
    """JSON report formatter"""

    def __init__(self, formatter_def: dict):
        """
        Initialize object

        :param formatter_def: formatter definition

        :returns: `symmconv.formatter.json_.JSONFormatter`
        """

        super().__init__({'name': 'json',
                          'pretty': formatter_def.get('pretty', False)})
        self.mimetype = 'application/json'

    def write(self, options: dict = {}, data: dict = None) -> str:
        """
        Generate the report envelope as JSON

        :param options: unused
        :param data: report envelope

        :returns: JSON text ending in a newline
        """

        try:
            return to_json(data, self.pretty) + '\n'
        except (TypeError, ValueError) as err:
            LOGGER.error(err)
            raise FormatterSerializationError('Error writing JSON output')

    def __repr__(self):
        return f'<JSONFormatter> {self.name}'
