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

"""Execution of one run: inputs, processor, report envelope, exit code"""

import logging
import time
from typing import Any, Dict, Tuple

from pydantic import ValidationError

from symmconv.analysis import AnalysisError
from symmconv.expr import ExpressionError, UnboundParameterError, parse
from symmconv.inequalities import InequalityError
from symmconv.integrate import QuadratureError
from symmconv.meanspace import MeanSpaceError
from symmconv.models import Command, RunConfig
from symmconv.plugin import InvalidPluginError, load_plugin
from symmconv.process.base import ProcessorGenericError
from symmconv.util import SCHEMA_VERSION

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2
EXIT_NONCONVERGED = 3

#: errors caused by the inputs of a run, reported with exit code 2
USER_ERRORS = (ExpressionError, ValidationError, ValueError, MeanSpaceError,
               QuadratureError, AnalysisError, InequalityError,
               ProcessorGenericError, InvalidPluginError)

#: processor of each command without a kind
COMMAND_PROCESSES = {
    Command.CHECK: 'pconvex',
    Command.TRANSFORM: 'transform',
    Command.FRACINT: 'fracint'
}


def process_id(config: RunConfig) -> str:
    """
    Processor identifier of a run

    :param config: `RunConfig`

    :returns: plugin name under `PLUGINS['process']`
    """

    if config.kind is not None:
        return config.kind
    try:
        return COMMAND_PROCESSES[config.command]
    except KeyError:
        raise ProcessorGenericError(
            f'{config.command.value} needs a check or chain name')


def compile_function(source: str, bindings: Dict[str, float]):
    """
    Parse an expression and bind its parameters

    :param source: expression text
    :param bindings: parameter values

    :returns: `FuncExpr` with every parameter bound
    """

    expr = parse(source)
    expr = expr.bind({k: v for k, v in bindings.items()
                      if k in expr.parameters})
    missing = sorted(expr.unbound())
    if missing:
        raise UnboundParameterError(missing[0])
    return expr


def prepare_inputs(config: RunConfig) -> Dict[str, Any]:
    """
    Process inputs of a run

    :param config: `RunConfig`

    :returns: `dict` of process inputs
    """

    bindings = config.bindings()
    data = {
        'interval': config.interval,
        'p': float(config.p) if config.p is not None else None,
        'alpha': float(config.alpha) if config.alpha is not None else None,
        'cfg': config.quad,
        'grid': config.grid,
        'chain_tol': config.chain_tol,
        'x': config.x,
        'y': config.y,
        'points': config.points,
        'base': config.base,
        'at': config.at,
        'side': config.side,
        'verify': config.verify
    }
    if config.function_source is not None:
        data['f'] = compile_function(config.function_source, bindings)
    if config.weight_source is not None:
        data['w'] = compile_function(config.weight_source, bindings)
    return data


def new_envelope(config: RunConfig, name: str = None) -> Dict[str, Any]:
    """
    Empty report envelope of a run

    :param config: `RunConfig`
    :param name: processor identifier

    :returns: `dict`
    """

    return {
        'schema_version': SCHEMA_VERSION,
        'command': config.command.value,
        'config': config.dict(exclude={'output_path', 'timings'}),
        'name': name,
        'terms': [],
        'margins': [],
        'holds': None,
        'converged': True,
        'tolerance': None,
        'witness': None,
        'details': {},
        'warnings': [],
        'error': None,
        'exit_code': None,
        'timings_ms': None
    }


def exit_code(envelope: Dict[str, Any]) -> int:
    """
    Exit code of an envelope, an error winning over non-convergence and
    non-convergence over a failed claim

    :param envelope: report envelope

    :returns: `int`
    """

    if envelope.get('error') is not None:
        return EXIT_ERROR
    if not envelope.get('converged', True):
        return EXIT_NONCONVERGED
    if envelope.get('holds') is False:
        return EXIT_FAILED
    return EXIT_OK


def error_envelope(envelope: Dict[str, Any],
                   err: Exception) -> Dict[str, Any]:
    envelope['error'] = {'type': type(err).__name__, 'message': str(err)}
    envelope['holds'] = None
    envelope['exit_code'] = EXIT_ERROR
    return envelope


def execute(config: RunConfig) -> Tuple[int, Dict[str, Any]]:
    """
    Run one check, chain, curve or fractional integral

    :param config: `RunConfig`

    :returns: tuple of exit code and report envelope
    """

    envelope = new_envelope(config)
    start = time.perf_counter()

    try:
        name = process_id(config)
        envelope['name'] = name
        processor = load_plugin('process', {'name': name})
        data = prepare_inputs(config)
        LOGGER.debug(f'Executing {processor!r}')
        _, outputs = processor.execute(data)
    except USER_ERRORS as err:
        LOGGER.error(f'{type(err).__name__}: {err}')
        error_envelope(envelope, err)
    else:
        envelope.update(outputs)
        envelope['exit_code'] = exit_code(envelope)

    if config.timings:
        elapsed = time.perf_counter() - start
        envelope['timings_ms'] = {'total': round(elapsed * 1000.0, 3)}

    return envelope['exit_code'], envelope
