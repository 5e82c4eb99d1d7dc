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

"""Regression corpus: YAML fixtures, each one check or chain with the
outcome it is expected to produce"""

from copy import deepcopy
import json
import logging
from multiprocessing import dummy
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Union

from jsonschema import ValidationError as SchemaValidationError
from jsonschema import validate as jsonschema_validate
from pydantic import ValidationError
import yaml

from symmconv.expr import ExpressionError, parse
from symmconv.models import Command, RunConfig
from symmconv.process.manager import EXIT_ERROR, exit_code, execute
from symmconv.util import SCHEMAS, THISDIR, to_json, yaml_load

LOGGER = logging.getLogger(__name__)

#: fixtures shipped with the package
BUILTIN_CORPUS = THISDIR / 'fixtures'

#: fixture check names and the processes they run
CHECKS = {
    'pconvex': 'pconvex',
    'symmetrized': 'symmetrized-convex',
    'harmonic-convex': 'harmonic-convex',
    'weight': 'p-symmetric-weight',
    'crosscheck': 'crosscheck',
    'hh': 'hh',
    'hh-symmetrized': 'symmetrized',
    'harmonic': 'harmonic',
    'bounds': 'bounds',
    'extrema': 'extrema',
    'fejer': 'fejer',
    'chain': 'chain',
    'dragomir': 'dragomir',
    'harmonic-chain': 'harmonic-chain',
    'reflected': 'reflected',
    'refinement': 'refinement',
    'double': 'double',
    'fracfejer': 'fracfejer',
    'fracweight': 'fracweight',
    'frachh': 'frachh'
}

#: processes run by the check command, the others by verify
DECISIONS = ('pconvex', 'symmetrized-convex', 'harmonic-convex',
             'p-symmetric-weight', 'crosscheck')


class Fixture(NamedTuple):
    filename: str
    document: Dict[str, Any]
    lines: Dict[str, int]


class FixtureResult(NamedTuple):
    fixture: Fixture
    outcome: Optional[str]
    envelope: Optional[Dict[str, Any]]
    error: Optional['FixtureError']


def _key_lines(text: str) -> Dict[str, int]:
    """1-based line of every top-level key of a YAML mapping"""

    node = yaml.compose(text, Loader=yaml.SafeLoader)
    if not isinstance(node, yaml.MappingNode):
        return {}
    return {key.value: key.start_mark.line + 1 for key, _ in node.value}


def load_fixture(path: Union[Path, str]) -> Fixture:
    """
    Read and validate a fixture file

    :param path: path of the YAML fixture

    :returns: `Fixture`
    """

    path = Path(path)
    filename = path.name
    text = path.read_text(encoding='utf-8')

    try:
        with path.open(encoding='utf-8') as fh:
            document = yaml_load(fh)
        lines = _key_lines(text)
    except yaml.MarkedYAMLError as err:
        mark = err.problem_mark or err.context_mark
        line = mark.line + 1 if mark is not None else 1
        raise FixtureError(filename, line, err.problem or str(err))
    except yaml.YAMLError as err:
        raise FixtureError(filename, 1, str(err))

    if not isinstance(document, dict):
        raise FixtureError(filename, 1, 'fixture must be a mapping')

    schema_file = SCHEMAS / 'fixture-1.yml'
    with schema_file.open() as fh:
        schema = yaml_load(fh)

    try:
        jsonschema_validate(json.loads(to_json(document)), schema)
    except SchemaValidationError as err:
        key = err.path[0] if err.path else None
        raise FixtureError(filename, lines.get(key, 1), err.message)

    check = document['check']
    if check not in ('weight', 'fracweight') and 'f' not in document:
        raise FixtureError(filename, lines['check'],
                           f'check {check!r} needs a function f')

    for key in ('f', 'w'):
        if key in document:
            try:
                parse(document[key])
            except ExpressionError as err:
                raise FixtureError(filename, lines[key], str(err))

    return Fixture(filename, document, lines)


def fixture_config(fixture: Fixture, template: RunConfig) -> RunConfig:
    """
    Run configuration of a fixture

    :param fixture: `Fixture`
    :param template: corpus run configuration (grid, quad, tolerance)

    :returns: `RunConfig`
    """

    doc = fixture.document
    kind = CHECKS[doc['check']]
    function_source = doc.get('f')
    weight_source = doc.get('w')
    if doc['check'] == 'weight' and weight_source is None:
        weight_source = function_source

    try:
        return RunConfig(
            command=Command.CHECK if kind in DECISIONS else Command.VERIFY,
            kind=kind,
            function_source=function_source,
            weight_source=weight_source,
            interval=(doc['a'], doc['b']),
            p=doc.get('p'),
            alpha=doc.get('alpha'),
            x=doc.get('x'),
            y=doc.get('y'),
            params=doc.get('params', {}),
            grid=template.grid,
            quad=template.quad,
            chain_tol=template.chain_tol
        )
    except ValidationError as err:
        raise FixtureError(fixture.filename, fixture.lines.get('check', 1),
                           str(err).replace('\n', ' '))


def run_fixture(fixture: Fixture, template: RunConfig) -> FixtureResult:
    """
    Run one fixture

    :param fixture: `Fixture`
    :param template: corpus run configuration

    :returns: `FixtureResult`
    """

    try:
        config = fixture_config(fixture, template)
    except FixtureError as err:
        return FixtureResult(fixture, None, None, err)

    _, envelope = execute(config)
    if envelope['error'] is not None:
        error = envelope['error']
        err = FixtureError(fixture.filename,
                           fixture.lines.get('check', 1),
                           f'{error["type"]}: {error["message"]}')
        return FixtureResult(fixture, None, envelope, err)

    outcome = 'holds' if envelope['holds'] else 'fails'
    LOGGER.debug(f'{fixture.filename}: {outcome}')
    return FixtureResult(fixture, outcome, envelope, None)


def fixture_files(path: Union[Path, str]) -> List[Path]:
    """
    Fixture files of a directory, sorted by filename

    :param path: corpus directory

    :returns: `list` of paths
    """

    path = Path(path)
    if not path.is_dir():
        raise FixtureError(str(path), 0, 'corpus path is not a directory')
    files = [p for p in path.iterdir()
             if p.is_file() and p.suffix in ('.yml', '.yaml')]
    return sorted(files, key=lambda p: p.name)


def run_corpus(path: Union[Path, str, None],
               template: RunConfig) -> Dict[str, Any]:
    """
    Run every fixture of a corpus

    Fixtures run in a thread pool of `template.grid.workers` threads;
    results are ordered by filename.

    :param path: corpus directory (built-in corpus when None)
    :param template: corpus run configuration

    :returns: `dict` of outputs merged into the report envelope, raises
              `FixtureError` for the first malformed fixture
    """

    path = BUILTIN_CORPUS if path is None else Path(path)
    files = fixture_files(path)
    LOGGER.debug(f'Running {len(files)} fixtures from {path}')

    fixtures = [load_fixture(p) for p in files]
    # fixtures share the pool; their own grids stay single-threaded
    single = template.copy(update={
        'grid': template.grid.copy(update={'workers': 1})})

    def run(fixture):
        return run_fixture(fixture, single)

    if template.grid.workers > 1 and len(fixtures) > 1:
        with dummy.Pool(template.grid.workers) as pool:
            results = pool.map(run, fixtures)
    else:
        results = [run(fixture) for fixture in fixtures]

    for result in results:
        if result.error is not None:
            raise result.error

    rows = []
    warnings = []
    converged = True
    for result in results:
        doc = result.fixture.document
        envelope = result.envelope
        passed = result.outcome == doc['expect']
        converged = converged and envelope['converged']
        warnings.extend(f'{result.fixture.filename}: {w}'
                        for w in envelope['warnings'])
        rows.append({
            'fixture': result.fixture.filename,
            'check': doc['check'],
            'expect': doc['expect'],
            'outcome': result.outcome,
            'status': 'pass' if passed else 'fail',
            'converged': envelope['converged']
        })

    failed = [row['fixture'] for row in rows if row['status'] == 'fail']
    for name in failed:
        LOGGER.warning(f'Fixture {name} does not match its expectation')

    return {
        'name': 'corpus',
        'terms': [],
        'margins': [],
        'holds': not failed,
        'converged': converged,
        'tolerance': template.chain_tol,
        'witness': None,
        'details': {
            'path': str(path),
            'fixtures': len(rows),
            'passed': len(rows) - len(failed),
            'failed': failed
        },
        'warnings': warnings,
        'rows': rows
    }


def execute_corpus(config: RunConfig,
                   envelope: Dict[str, Any]) -> Dict[str, Any]:
    """
    Fill a corpus report envelope

    :param config: `RunConfig` of the corpus command
    :param envelope: empty report envelope

    :returns: the envelope
    """

    envelope = deepcopy(envelope)
    envelope['name'] = 'corpus'
    try:
        envelope.update(run_corpus(config.corpus_path, config))
    except FixtureError as err:
        LOGGER.error(str(err))
        envelope['error'] = {'type': 'FixtureError', 'message': str(err)}
        envelope['details'] = {'filename': err.filename, 'line': err.line}
        envelope['exit_code'] = EXIT_ERROR
        return envelope

    envelope['exit_code'] = exit_code(envelope)
    return envelope


class FixtureError(Exception):
    """malformed fixture file"""

    def __init__(self, filename: str, line: int, message: str):
        self.filename = filename
        self.line = line
        self.message = message
        super().__init__(f'{filename}:{line}: {message}')
