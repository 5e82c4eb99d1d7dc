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

"""Command line front end"""

import logging
import time
from typing import Any, Dict, Optional

import click
from jsonschema import ValidationError as SchemaValidationError
from pydantic import ValidationError
import yaml

from symmconv.config import (CONFIG_ENV, ConfigError, chain_tolerance,
                             grid_settings, load_config, quad_settings)
from symmconv.corpus import execute_corpus
from symmconv.log import setup_logger
from symmconv.models import (Command, GridSpec, OutputFormat, QuadConfig,
                             RunConfig)
from symmconv.plugin import load_plugin
from symmconv.process.manager import EXIT_ERROR, execute, new_envelope
from symmconv.util import SCHEMA_VERSION, get_typed_value

LOGGER = logging.getLogger(__name__)

FORMATS = [fmt.value for fmt in OutputFormat]


def _parse_params(ctx, param, values) -> Dict[str, float]:
    params = {}
    for value in values:
        name, sep, number = value.partition('=')
        number = get_typed_value(number.strip())
        if not sep or not name.strip() or \
                not isinstance(number, (int, float)):
            raise click.BadParameter(f'expected NAME=VALUE, got {value!r}')
        params[name.strip()] = float(number)
    return params


def _options(options):
    def decorator(f):
        for option in reversed(options):
            f = option(f)
        return f
    return decorator


CONFIG_OPTIONS = [
    click.option('--config', 'config_file', envvar=CONFIG_ENV,
                 type=click.Path(dir_okay=False),
                 help=f'configuration file (default ${CONFIG_ENV})')
]

OUTPUT_OPTIONS = [
    click.option('--format', 'output_format', type=click.Choice(FORMATS),
                 help='report format (default json)'),
    click.option('--output', 'output_path', type=click.Path(dir_okay=False),
                 help='write the report to a file instead of stdout'),
    click.option('--pretty', is_flag=True, default=None,
                 help='indent JSON reports'),
    click.option('--timings', is_flag=True, default=False,
                 help='add wall clock timings to the report')
]

QUAD_OPTIONS = [
    click.option('--abs-tol', type=float,
                 help='quadrature absolute tolerance'),
    click.option('--rel-tol', type=float,
                 help='quadrature relative tolerance'),
    click.option('--max-subdivisions', type=int,
                 help='quadrature subdivision budget')
]

GRID_OPTIONS = [
    click.option('--xy-points', type=int, help='grid points per x/y axis'),
    click.option('--t-points', type=int, help='grid points on the t axis'),
    click.option('--refine-rounds', type=int, help='local refinement rounds'),
    click.option('--workers', type=int, help='worker threads'),
    click.option('--defect-tol', type=float, help='convexity tolerance'),
    click.option('--sym-tol', type=float, help='weight symmetry tolerance')
]

FUNCTION_OPTIONS = [
    click.option('--f', 'function_source', help='function of x'),
    click.option('--w', 'weight_source', help='weight function of x'),
    click.option('--p', type=float, help='exponent p (non-zero)'),
    click.option('--interval', help='interval a,b with 0 < a < b'),
    click.option('--param', 'params', multiple=True, callback=_parse_params,
                 help='expression parameter NAME=VALUE (repeatable)')
]

CHAIN_OPTIONS = [
    click.option('--chain-tol', type=float, help='tolerance of one link')
]


def _bare_envelope(command: Command, settings: Dict[str, Any]
                   ) -> Dict[str, Any]:
    return {
        'schema_version': SCHEMA_VERSION,
        'command': command.value,
        'config': settings,
        'name': None,
        'terms': [],
        'margins': [],
        'holds': None,
        'converged': True,
        'tolerance': None,
        'witness': None,
        'details': {},
        'warnings': [],
        'error': None,
        'exit_code': EXIT_ERROR,
        'timings_ms': None
    }


def _emit(envelope: Dict[str, Any], output_format: str,
          output_path: Optional[str], pretty: bool):
    formatter = load_plugin('formatter', {'name': output_format,
                                          'pretty': pretty})
    text = formatter.write({}, envelope)

    if envelope.get('error') and output_format != 'json':
        error = envelope['error']
        click.echo(f'Error: {error["type"]}: {error["message"]}', err=True)

    if output_path is None:
        click.echo(text, nl=False)
    else:
        with open(output_path, 'w', encoding='utf-8', newline='') as fh:
            fh.write(text)


def _layered(flags: Dict[str, Any], defaults: Dict[str, Any]
             ) -> Dict[str, Any]:
    settings = dict(defaults)
    settings.update({k: v for k, v in flags.items() if v is not None})
    return settings


def _execute(ctx: click.Context, command: Command, **kwargs):
    """
    Layer flags over configuration, run and emit the report

    :param ctx: click context
    :param command: `Command`
    :param kwargs: command options

    :returns: void, exits with the report exit code
    """

    config_file = kwargs.pop('config_file', None)
    output_path = kwargs.pop('output_path', None)
    output_format = kwargs.pop('output_format', None)
    pretty = kwargs.pop('pretty', None)

    try:
        config_dict = load_config(config_file)
    except (OSError, ConfigError, SchemaValidationError,
            yaml.YAMLError) as err:
        envelope = _bare_envelope(command, {'config_file': config_file})
        envelope['error'] = {'type': type(err).__name__,
                             'message': getattr(err, 'message', str(err))}
        _emit(envelope, output_format or 'json', output_path, bool(pretty))
        ctx.exit(EXIT_ERROR)

    setup_logger(config_dict.get('logging', {}))

    output_config = config_dict.get('output', {})
    output_format = output_format or output_config.get('format', 'json')
    if pretty is None:
        pretty = output_config.get('pretty', False)

    quad = {key: kwargs.pop(key, None)
            for key in ('abs_tol', 'rel_tol', 'max_subdivisions')}
    grid = {key: kwargs.pop(key, None)
            for key in ('xy_points', 't_points', 'refine_rounds', 'workers',
                        'defect_tol', 'sym_tol')}
    chain_tol = kwargs.pop('chain_tol', None)
    if chain_tol is None:
        chain_tol = chain_tolerance(config_dict)

    settings = {key: value for key, value in kwargs.items()
                if value is not None}
    if chain_tol is not None:
        settings['chain_tol'] = chain_tol

    start = time.perf_counter()
    try:
        config = RunConfig(
            command=command,
            grid=GridSpec(**_layered(grid, grid_settings(config_dict))),
            quad=QuadConfig(**_layered(quad, quad_settings(config_dict))),
            output_format=output_format,
            output_path=output_path,
            pretty=pretty,
            **settings)
    except (ValidationError, ConfigError) as err:
        LOGGER.error(err)
        envelope = _bare_envelope(command, settings)
        envelope['error'] = {'type': type(err).__name__,
                             'message': str(err).replace('\n', ' ')}
        _emit(envelope, output_format, output_path, pretty)
        ctx.exit(EXIT_ERROR)

    if command == Command.CORPUS:
        envelope = execute_corpus(config, new_envelope(config))
        code = envelope['exit_code']
        if config.timings:
            elapsed = time.perf_counter() - start
            envelope['timings_ms'] = {'total': round(elapsed * 1000.0, 3)}
    else:
        code, envelope = execute(config)

    _emit(envelope, output_format, output_path, pretty)
    ctx.exit(code)


@click.command()
@click.pass_context
@_options(FUNCTION_OPTIONS)
@click.option('--symmetrized', 'kind', flag_value='symmetrized-convex',
              help='decide symmetrized p-convexity')
@click.option('--harmonic', 'kind', flag_value='harmonic-convex',
              help='decide harmonic convexity')
@click.option('--weight', 'kind', flag_value='p-symmetric-weight',
              help='decide p-symmetry of the weight --w (or --f)')
@click.option('--crosscheck', 'kind', flag_value='crosscheck',
              help='compare with the power coordinate composition')
@click.option('--pconvex', 'kind', flag_value='pconvex', default=True,
              help='decide p-convexity (default)')
@_options(GRID_OPTIONS + QUAD_OPTIONS + OUTPUT_OPTIONS + CONFIG_OPTIONS)
def check(ctx, **kwargs):
    """Decide a convexity class of f, or p-symmetry of a weight"""

    if kwargs['kind'] == 'p-symmetric-weight' and \
            kwargs['weight_source'] is None:
        kwargs['weight_source'] = kwargs.pop('function_source')
    _execute(ctx, Command.CHECK, **kwargs)


@click.command()
@click.pass_context
@click.argument('chain', type=click.Choice([
    'hh', 'symmetrized', 'harmonic', 'bounds', 'extrema', 'fejer', 'chain',
    'dragomir', 'harmonic-chain', 'reflected', 'refinement', 'double',
    'fracfejer', 'fracweight', 'frachh']))
@_options(FUNCTION_OPTIONS)
@click.option('--alpha', type=float, help='fractional order')
@click.option('--x', type=float, help='first point')
@click.option('--y', type=float, help='second point')
@click.option('--verify-hypothesis', 'verify', is_flag=True, default=False,
              help='record whether f is symmetrized p-convex')
@_options(CHAIN_OPTIONS + GRID_OPTIONS + QUAD_OPTIONS + OUTPUT_OPTIONS +
          CONFIG_OPTIONS)
def verify(ctx, chain, **kwargs):
    """Evaluate an inequality chain"""

    _execute(ctx, Command.VERIFY, kind=chain, **kwargs)


@click.command()
@click.pass_context
@_options(FUNCTION_OPTIONS)
@click.option('--points', type=int, default=101,
              help='curve points, uniform in x')
@_options(CHAIN_OPTIONS + GRID_OPTIONS + OUTPUT_OPTIONS + CONFIG_OPTIONS)
def transform(ctx, **kwargs):
    """Curve of f and its p-symmetrical transforms"""

    _execute(ctx, Command.TRANSFORM, **kwargs)


@click.command()
@click.pass_context
@click.option('--h', '--f', 'function_source', help='integrand h of x')
@click.option('--alpha', type=float, help='fractional order')
@click.option('--base', type=float, help='base point of the integral')
@click.option('--at', type=float, help='evaluation point')
@click.option('--side', type=click.Choice(['left', 'right']),
              default='left', help='left-sided or right-sided')
@click.option('--param', 'params', multiple=True, callback=_parse_params,
              help='expression parameter NAME=VALUE (repeatable)')
@_options(QUAD_OPTIONS + OUTPUT_OPTIONS + CONFIG_OPTIONS)
def fracint(ctx, **kwargs):
    """One fractional integral of h"""

    _execute(ctx, Command.FRACINT, **kwargs)


@click.command('corpus')
@click.pass_context
@click.argument('path', required=False,
                type=click.Path(exists=True, file_okay=False))
@_options(CHAIN_OPTIONS + GRID_OPTIONS + QUAD_OPTIONS + OUTPUT_OPTIONS +
          CONFIG_OPTIONS)
def corpus_command(ctx, path, **kwargs):
    """Run a regression corpus (the built-in one without PATH)"""

    _execute(ctx, Command.CORPUS, corpus_path=path, **kwargs)
