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

"""Plugin loader"""

import importlib
import logging
from typing import Any

LOGGER = logging.getLogger(__name__)

_CHAINS = 'symmconv.process.chains.InequalityProcessor'

#: Loads formatters and processes available to symmconv
PLUGINS = {
    'formatter': {
        'json': 'symmconv.formatter.json_.JSONFormatter',
        'csv': 'symmconv.formatter.csv_.CSVFormatter',
        'human': 'symmconv.formatter.human.HumanFormatter'
    },
    'process': {
        'pconvex': 'symmconv.process.convexity.PConvexProcessor',
        'symmetrized-convex': 'symmconv.process.convexity.SymmetrizedConvexProcessor',  # noqa
        'harmonic-convex': 'symmconv.process.convexity.HarmonicConvexProcessor',  # noqa
        'p-symmetric-weight': 'symmconv.process.convexity.SymmetricWeightProcessor',  # noqa
        'crosscheck': 'symmconv.process.convexity.CrossCheckProcessor',
        'hh': _CHAINS,
        'symmetrized': _CHAINS,
        'harmonic': _CHAINS,
        'bounds': _CHAINS,
        'extrema': _CHAINS,
        'fejer': _CHAINS,
        'chain': _CHAINS,
        'dragomir': _CHAINS,
        'harmonic-chain': _CHAINS,
        'reflected': _CHAINS,
        'refinement': _CHAINS,
        'double': _CHAINS,
        'fracfejer': _CHAINS,
        'fracweight': _CHAINS,
        'frachh': _CHAINS,
        'transform': 'symmconv.process.transform.TransformProcessor',
        'fracint': 'symmconv.process.transform.FracIntProcessor'
    }
}


def load_plugin(plugin_type: str, plugin_def: dict) -> Any:
    """
    loads plugin by name

    :param plugin_type: type of plugin (formatter, process)
    :param plugin_def: plugin definition

    :returns: plugin object
    """

    name = plugin_def['name']

    if plugin_type not in PLUGINS.keys():
        msg = f'Plugin type {plugin_type} not found'
        LOGGER.exception(msg)
        raise InvalidPluginError(msg)

    plugin_list = PLUGINS[plugin_type]

    LOGGER.debug(f'Plugins: {plugin_list}')

    if '.' not in name and name not in plugin_list.keys():
        msg = f'Plugin {name} not found'
        LOGGER.exception(msg)
        raise InvalidPluginError(msg)

    if '.' in name:  # dotted path
        packagename, classname = name.rsplit('.', 1)
    else:  # core plugin
        packagename, classname = plugin_list[name].rsplit('.', 1)

    LOGGER.debug(f'package name: {packagename}')
    LOGGER.debug(f'class name: {classname}')

    module = importlib.import_module(packagename)
    class_ = getattr(module, classname)
    plugin = class_(plugin_def)

    return plugin


class InvalidPluginError(Exception):
    """Invalid plugin"""
    pass
