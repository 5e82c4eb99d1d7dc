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

"""Convexity and weight-symmetry decisions as processes"""

import logging

from symmconv.analysis import (check_harmonically_convex, check_p_convex,
                               check_p_symmetric_weight,
                               check_symmetrized_p_convex, crosscheck_P2_1)
from symmconv.process.base import BaseProcessor, verdict_outputs

LOGGER = logging.getLogger(__name__)

MIMETYPE = 'application/json'


def _metadata(id_: str, title: str, inputs: tuple) -> dict:
    return {'id': id_, 'title': title, 'inputs': inputs}


PCONVEX_METADATA = _metadata(
    'pconvex', 'p-convexity', ('f', 'interval', 'p'))

SYMMETRIZED_METADATA = _metadata(
    'symmetrized-convex', 'Symmetrized p-convexity', ('f', 'interval', 'p'))

HARMONIC_METADATA = _metadata(
    'harmonic-convex', 'Harmonic convexity', ('f', 'interval'))

WEIGHT_METADATA = _metadata(
    'p-symmetric-weight', 'p-symmetric weight', ('w', 'interval', 'p'))

CROSSCHECK_METADATA = _metadata(
    'crosscheck', 'Power coordinate cross-check', ('f', 'interval', 'p'))



class PConvexProcessor(BaseProcessor):
    """p-convexity decision"""

    def __init__(self, processor_def: dict):
        super().__init__(processor_def, PCONVEX_METADATA)

    def execute(self, data: dict):
        self.require(data)
        verdict = check_p_convex(data['f'], data['interval'], data['p'],
                                 data.get('grid'))
        return MIMETYPE, verdict_outputs('pconvex', verdict)

    def __repr__(self):
        return f'<PConvexProcessor> {self.name}'


class SymmetrizedConvexProcessor(BaseProcessor):
    """symmetrized p-convexity decision"""

    def __init__(self, processor_def: dict):
        super().__init__(processor_def, SYMMETRIZED_METADATA)

    def execute(self, data: dict):
        self.require(data)
        verdict = check_symmetrized_p_convex(data['f'], data['interval'],
                                             data['p'], data.get('grid'))
        return MIMETYPE, verdict_outputs('symmetrized-convex', verdict)

    def __repr__(self):
        return f'<SymmetrizedConvexProcessor> {self.name}'


class HarmonicConvexProcessor(BaseProcessor):
    """harmonic convexity decision"""

    def __init__(self, processor_def: dict):
        super().__init__(processor_def, HARMONIC_METADATA)

    def execute(self, data: dict):
        self.require(data)
        verdict = check_harmonically_convex(data['f'], data['interval'],
                                            data.get('grid'))
        return MIMETYPE, verdict_outputs('harmonic-convex', verdict)

    def __repr__(self):
        return f'<HarmonicConvexProcessor> {self.name}'


class SymmetricWeightProcessor(BaseProcessor):
    """p-symmetry decision for a weight"""

    def __init__(self, processor_def: dict):
        super().__init__(processor_def, WEIGHT_METADATA)

    def execute(self, data: dict):
        self.require(data)
        verdict = check_p_symmetric_weight(data['w'], data['interval'],
                                           data['p'], data.get('grid'))

        witness = None
        if verdict.witness_x is not None:
            witness = {'x': verdict.witness_x}

        outputs = {
            'name': 'p-symmetric-weight',
            'terms': [{'label': 'worst asymmetry',
                       'value': verdict.worst_asymmetry}],
            'margins': [],
            'holds': verdict.holds,
            'converged': True,
            'tolerance': verdict.sym_tol,
            'witness': witness,
            'details': {'samples_checked': verdict.samples_checked},
            'warnings': []
        }
        return MIMETYPE, outputs

    def __repr__(self):
        return f'<SymmetricWeightProcessor> {self.name}'


class CrossCheckProcessor(BaseProcessor):
    """agreement of the direct and composed symmetrized decisions"""

    def __init__(self, processor_def: dict):
        super().__init__(processor_def, CROSSCHECK_METADATA)

    def execute(self, data: dict):
        self.require(data)
        check = crosscheck_P2_1(data['f'], data['interval'], data['p'],
                                data.get('grid'))

        outputs = verdict_outputs('crosscheck', check.direct,
                                  direct=check.direct.dict(),
                                  composed=check.composed.dict())
        outputs['terms'] = [
            {'label': 'direct worst defect',
             'value': check.direct.worst_defect},
            {'label': 'composed worst defect',
             'value': check.composed.worst_defect}
        ]
        outputs['holds'] = check.agrees
        if check.agrees:
            outputs['witness'] = None
        else:
            outputs['warnings'] = ['direct and composed verdicts disagree']
        return MIMETYPE, outputs

    def __repr__(self):
        return f'<CrossCheckProcessor> {self.name}'
