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
from typing import Any, Dict, Tuple

from symmconv.models import ConvexityVerdict, InequalityReport

LOGGER = logging.getLogger(__name__)


class BaseProcessor:
    """generic Processor ABC. Processes are inherited from this class"""

    def __init__(self, processor_def: dict, process_metadata: dict):
        """
        Initialize object

        :param processor_def: processor definition
        :param process_metadata: process metadata `dict` (id, title and
                                 the names of the required inputs)

        :returns: symmconv.process.base.BaseProcessor
        """
        self.name = processor_def['name']
        self.metadata = process_metadata

    def require(self, data: dict):
        """
        Check that the inputs listed in the process metadata are present

        :param data: `dict` of process inputs

        :returns: void, raises `ProcessorExecuteError` on a missing input
        """

        inputs = self.metadata['inputs']
        LOGGER.debug(f'{self.metadata["title"]}: inputs {inputs}')
        for key in inputs:
            if data.get(key) is None:
                raise ProcessorExecuteError(
                    f'{self.metadata["id"]} requires input {key!r}')

    def execute(self, data: dict) -> Tuple[str, Dict[str, Any]]:
        """
        execute the process

        :param data: `dict` of process inputs

        :returns: tuple of MIME type and `dict` of outputs merged into the
                  report envelope
        """

        raise NotImplementedError()

    def __repr__(self):
        return f'<BaseProcessor> {self.name}'


def report_outputs(report: InequalityReport) -> Dict[str, Any]:
    """
    Envelope fields of an evaluated chain

    :param report: `InequalityReport`

    :returns: `dict` of outputs
    """

    return {
        'name': report.name,
        'terms': [term.dict() for term in report.terms],
        'margins': list(report.margins),
        'holds': report.holds,
        'converged': report.converged,
        'tolerance': report.tolerance_used,
        'witness': None,
        'details': {
            'integrals': dict(report.integrals),
            'metadata': dict(report.metadata),
            'hypothesis_verified': report.hypothesis_verified
        },
        'warnings': list(report.warnings)
    }


def verdict_outputs(name: str, verdict: ConvexityVerdict,
                    **details) -> Dict[str, Any]:
    """
    Envelope fields of a convexity decision

    :param name: decision identifier
    :param verdict: `ConvexityVerdict`
    :param details: extra detail fields

    :returns: `dict` of outputs
    """

    details.update(samples_checked=verdict.samples_checked,
                   conclusion=verdict.conclusion)
    return {
        'name': name,
        'terms': [{'label': 'worst defect', 'value': verdict.worst_defect}],
        'margins': [],
        'holds': verdict.holds,
        'converged': True,
        'tolerance': verdict.defect_tol,
        'witness': verdict.witness.dict() if verdict.witness else None,
        'details': details,
        'warnings': []
    }


class ProcessorGenericError(Exception):
    """processor generic error"""
    pass


class ProcessorExecuteError(ProcessorGenericError):
    """invalid process inputs"""
    pass
