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

"""Configuration loading, validation and layering"""

import click
import json
from jsonschema import validate as jsonschema_validate
import logging
import os
from pathlib import Path
from typing import Optional, Union

from symmconv.util import SCHEMAS, get_typed_value, to_json, yaml_load

LOGGER = logging.getLogger(__name__)

#: environment variable naming the default configuration file
CONFIG_ENV = 'SYMMCONV_CONFIG'

#: environment variable overriding both quadrature tolerances
QUAD_TOL_ENV = 'SYMMCONV_QUAD_TOL'


def validate_config(instance_dict: dict) -> bool:
    """
    Validate symmconv configuration against symmconv schema

    :param instance_dict: dict of configuration

    :returns: `bool` of validation
    """

    schema_file = SCHEMAS / 'config' / 'symmconv-config-1.x.yml'

    with schema_file.open() as fh2:
        schema_dict = yaml_load(fh2)
        jsonschema_validate(json.loads(to_json(instance_dict)), schema_dict)

        return True


def load_config(config_file: Union[Path, str, None]) -> dict:
    """
    Read and validate a configuration file

    :param config_file: path of the YAML file (empty configuration if None)

    :returns: `dict` of configuration
    """

    if config_file is None:
        return {}

    LOGGER.debug(f'Loading configuration {config_file}')
    with open(config_file) as fh:
        instance = yaml_load(fh) or {}

    validate_config(instance)
    return instance


def quad_settings(config_dict: dict) -> dict:
    """
    Quadrature settings from the environment and a configuration

    The configuration file wins over `SYMMCONV_QUAD_TOL`, which sets both
    tolerances.

    :param config_dict: validated configuration

    :returns: `dict` of `QuadConfig` fields
    """

    settings = {}
    env_tol = os.environ.get(QUAD_TOL_ENV)
    if env_tol:
        value = get_typed_value(env_tol)
        if not isinstance(value, (int, float)) or not value > 0:
            raise ConfigError(f'{QUAD_TOL_ENV} must be a positive number, '
                              f'got {env_tol!r}')
        settings.update(abs_tol=float(value), rel_tol=float(value))

    settings.update(config_dict.get('quad', {}))
    return settings


def grid_settings(config_dict: dict) -> dict:
    """
    Grid settings of a configuration

    :param config_dict: validated configuration

    :returns: `dict` of `GridSpec` fields
    """

    settings = dict(config_dict.get('grid', {}))
    tolerances = config_dict.get('tolerances', {})
    if 'defect' in tolerances:
        settings['defect_tol'] = tolerances['defect']
    if 'symmetry' in tolerances:
        settings['sym_tol'] = tolerances['symmetry']
    return settings


def chain_tolerance(config_dict: dict) -> Optional[float]:
    return config_dict.get('tolerances', {}).get('chain')


class ConfigError(Exception):
    """configuration error"""
    pass


@click.group()
def config():
    """Configuration management"""
    pass


@click.command()
@click.pass_context
@click.option('--config', '-c', 'config_file', help='configuration file')
def validate(ctx, config_file):
    """Validate configuration"""

    if config_file is None:
        raise click.ClickException('--config/-c required')

    with open(config_file) as ff:
        click.echo(f'Validating {config_file}')
        instance = yaml_load(ff)
        validate_config(instance)
        click.echo('Valid configuration')


config.add_command(validate)
