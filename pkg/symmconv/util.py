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

"""Generic util functions used in the code"""

from enum import Enum
import json
import logging
import math
import os
from pathlib import Path
import re
from typing import Any, IO, Union

import yaml
from pydantic import BaseModel

LOGGER = logging.getLogger(__name__)

THISDIR = Path(__file__).parent.resolve()

SCHEMAS = THISDIR / 'schemas'

#: version of the JSON report envelope
SCHEMA_VERSION = 1


def get_typed_value(value: str) -> Union[float, int, str]:
    """
    Derive true type from data value

    :param value: value

    :returns: value as a native Python data type
    """

    try:
        if len(value) > 1 and value.startswith('0') and \
                value[1] not in '.eE':
            value2 = value
        else:  # int?
            value2 = int(value)
    except ValueError:
        try:  # float?
            value2 = float(value)
        except ValueError:  # string (default)?
            value2 = value

    return value2


def yaml_load(fh: IO) -> dict:
    """
    serializes a YAML files into a pyyaml object

    :param fh: file handle

    :returns: `dict` representation of YAML
    """

    # support environment variables in config
    # https://stackoverflow.com/a/55301129
    path_matcher = re.compile(r'.*\$\{([^}^{]+)\}.*')

    def path_constructor(loader, node):
        env_var = path_matcher.match(node.value).group(1)
        if env_var not in os.environ:
            msg = f'Undefined environment variable {env_var} in config'
            raise EnvironmentError(msg)
        return get_typed_value(os.path.expandvars(node.value))

    class EnvVarLoader(yaml.SafeLoader):
        pass

    EnvVarLoader.add_implicit_resolver('!path', path_matcher, None)
    EnvVarLoader.add_constructor('!path', path_constructor)

    return yaml.load(fh, Loader=EnvVarLoader)


def canonicalize(obj: Any) -> Any:
    """
    Reduce a report structure to plain JSON types

    Non-finite floats become None, numpy scalars and arrays become Python
    numbers and lists, pydantic models and enums their values.

    :param obj: object to be converted

    :returns: JSON-ready object
    """

    if isinstance(obj, BaseModel):
        return canonicalize(obj.dict())
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): canonicalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonicalize(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        return float(obj) if math.isfinite(obj) else None

    name = type(obj).__name__
    if name.startswith(('int', 'uint')):
        return int(obj)
    if name.startswith('float'):
        return canonicalize(float(obj))
    if name in ('bool_', 'bool'):
        return bool(obj)
    if name == 'ndarray':
        return canonicalize(obj.tolist())
    if isinstance(obj, Path):
        return str(obj)

    return json_serial(obj)


def to_json(dict_: dict, pretty: bool = False) -> str:
    """
    Serialize dict to json

    Floats are written in shortest round-trip form.

    :param dict_: `dict` of JSON representation
    :param pretty: `bool` of whether to prettify JSON (default is `False`)

    :returns: JSON string representation
    """

    if pretty:
        indent = 4
    else:
        indent = None

    return json.dumps(canonicalize(dict_), default=json_serial,
                      indent=indent, allow_nan=False)


def json_serial(obj: Any) -> str:
    """
    helper function to convert to JSON non-default
    types (source: https://stackoverflow.com/a/22238613)

    :param obj: `object` to be evaluated

    :returns: JSON non-default type to `str`
    """

    if isinstance(obj, bytes):
        try:
            LOGGER.debug('Returning as UTF-8 decoded bytes')
            return obj.decode('utf-8')
        except UnicodeDecodeError:
            pass
    elif isinstance(obj, (set, frozenset)):
        return sorted(obj)

    msg = f'{obj} type {type(obj)} not serializable'
    LOGGER.error(msg)
    raise TypeError(msg)


def format_float(value: float) -> str:
    """
    Shortest round-trip text of a float, 'nan'/'inf' kept as such

    :param value: `float`

    :returns: `str`
    """

    if value is None:
        return ''
    return repr(float(value))
