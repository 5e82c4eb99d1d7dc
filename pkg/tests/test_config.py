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

import os

from click.testing import CliRunner
from jsonschema.exceptions import ValidationError
import pytest

from symmconv import cli
from symmconv.config import (ConfigError, chain_tolerance, grid_settings,
                             load_config, quad_settings, validate_config)
from symmconv.util import yaml_load

from .util import get_test_file_path


@pytest.fixture()
def config():
    with open(get_test_file_path('symmconv-test-config.yml')) as fh:
        return yaml_load(fh)


def test_config_envvars():
    os.environ['SYMMCONV_TEST_LOGLEVEL'] = 'DEBUG'
    os.environ['SYMMCONV_TEST_XY_POINTS'] = '17'

    with open(get_test_file_path('symmconv-test-config-envvars.yml')) as fh:
        config = yaml_load(fh)

    assert isinstance(config, dict)
    assert config['logging']['level'] == 'DEBUG'
    assert config['grid']['xy_points'] == 17
    assert validate_config(config)

    os.environ.pop('SYMMCONV_TEST_XY_POINTS')

    with pytest.raises(EnvironmentError):
        with open(get_test_file_path('symmconv-test-config-envvars.yml')) as fh:  # noqa
            config = yaml_load(fh)

    os.environ.pop('SYMMCONV_TEST_LOGLEVEL')


def test_validate_config(config):
    is_valid = validate_config(config)
    assert is_valid

    with pytest.raises(ValidationError):
        is_valid = validate_config({'foo': 'bar'})

    with pytest.raises(ValidationError):
        validate_config({'grid': {'xy_points': 2}})

    with pytest.raises(ValidationError):
        validate_config({'quad': {'abs_tol': 0}})


def test_shipped_config_is_valid():
    assert load_config('symmconv-config.yml')['grid']['xy_points'] == 41


def test_load_config(config):
    assert load_config(None) == {}
    assert load_config(get_test_file_path('symmconv-test-config.yml')) == \
        config

    with pytest.raises(OSError):
        load_config(get_test_file_path('no-such-config.yml'))


def test_settings(config):
    assert grid_settings(config) == {'defect_tol': 1e-9, 'sym_tol': 1e-9}
    assert chain_tolerance(config) == 1e-7
    assert chain_tolerance({}) is None

    grid = load_config(get_test_file_path('symmconv-test-config-grid.yml'))
    assert grid_settings(grid) == {'xy_points': 11, 't_points': 5,
                                   'refine_rounds': 1}


def test_quad_settings(config, monkeypatch):
    monkeypatch.delenv('SYMMCONV_QUAD_TOL', raising=False)
    assert quad_settings(config) == {}

    monkeypatch.setenv('SYMMCONV_QUAD_TOL', '1e-8')
    assert quad_settings(config) == {'abs_tol': 1e-8, 'rel_tol': 1e-8}
    assert quad_settings({'quad': {'abs_tol': 1e-6}}) == \
        {'abs_tol': 1e-6, 'rel_tol': 1e-8}

    for bad in ('-1', 'loose'):
        monkeypatch.setenv('SYMMCONV_QUAD_TOL', bad)
        with pytest.raises(ConfigError):
            quad_settings(config)


def test_validate_command():
    runner = CliRunner()
    config_file = get_test_file_path('symmconv-test-config-grid.yml')
    result = runner.invoke(cli, ['config', 'validate', '-c', config_file])
    assert result.exit_code == 0
    assert 'Valid configuration' in result.output

    result = runner.invoke(cli, ['config', 'validate'])
    assert result.exit_code != 0
