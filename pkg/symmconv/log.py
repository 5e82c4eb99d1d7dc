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

"""Logging system"""

import logging
import sys

LOGGER = logging.getLogger(__name__)

LOG_FORMAT = \
    '[%(asctime)s] {%(pathname)s:%(lineno)d} %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%dT%H:%M:%SZ'


def setup_logger(logging_config: dict):
    """
    Setup configuration

    Records go to `logging_config['logfile']` when given, to stderr
    otherwise; stdout is reserved for reports.

    :param logging_config: logging specific configuration

    :returns: void (creates logging instance)
    """

    loglevels = {
        'CRITICAL': logging.CRITICAL,
        'ERROR': logging.ERROR,
        'WARNING': logging.WARNING,
        'INFO': logging.INFO,
        'DEBUG': logging.DEBUG,
        'NOTSET': logging.NOTSET,
    }

    loglevel = loglevels[logging_config.get('level', 'WARNING')]

    if logging_config.get('logfile'):
        logging.basicConfig(level=loglevel, datefmt=DATE_FORMAT,
                            format=LOG_FORMAT,
                            filename=logging_config['logfile'], force=True)
    else:
        logging.basicConfig(level=loglevel, datefmt=DATE_FORMAT,
                            format=LOG_FORMAT, stream=sys.stderr, force=True)

    LOGGER.debug('Logging initialized')
    return
