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

"""Transform curves and single fractional integrals as processes"""

import logging

import numpy as np

from symmconv.inequalities import transform_extrema_report
from symmconv.integrate import Integrator
from symmconv.meanspace import p_antisym_transform, p_sym_transform
from symmconv.process.base import BaseProcessor, report_outputs

LOGGER = logging.getLogger(__name__)

#: Process metadata: identifier, title and required inputs
TRANSFORM_METADATA = {
    'id': 'transform',
    'title': 'p-symmetrical transform curve',
    'inputs': ('f', 'interval', 'p')
}

FRACINT_METADATA = {
    'id': 'fracint',
    'title': 'Fractional integral',
    'inputs': ('f', 'alpha', 'base', 'at')
}


class TransformProcessor(BaseProcessor):
    """curve of the p-symmetrical transforms"""

    def __init__(self, processor_def: dict):
        super().__init__(processor_def, TRANSFORM_METADATA)

    def execute(self, data: dict):
        self.require(data)
        f, interval, p = data['f'], data['interval'], data['p']
        points = data.get('points') or 101

        xs = np.linspace(interval.a, interval.b, points)
        xs[0], xs[-1] = interval.a, interval.b
        columns = {
            'x': xs,
            'f': np.asarray(f(xs), dtype=float),
            'P': np.asarray(p_sym_transform(f, interval, p)(xs), dtype=float),
            'AP': np.asarray(p_antisym_transform(f, interval, p)(xs),
                             dtype=float)
        }
        rows = [{key: float(values[i]) for key, values in columns.items()}
                for i in range(points)]

        report = transform_extrema_report(f, interval, p, data.get('grid'),
                                          chain_tol=data['chain_tol'])
        outputs = report_outputs(report)
        outputs['rows'] = rows
        outputs['details']['points'] = points
        return 'application/json', outputs

    def __repr__(self):
        return f'<TransformProcessor> {self.name}'


class FracIntProcessor(BaseProcessor):
    """one fractional integral"""

    def __init__(self, processor_def: dict):
        super().__init__(processor_def, FRACINT_METADATA)

    def execute(self, data: dict):
        self.require(data)
        side = data.get('side') or 'left'
        integrate = Integrator(data.get('cfg'))

        if side == 'left':
            value = integrate.left(data['f'], data['base'], data['at'],
                                   data['alpha'])
            label = 'J_{base+}^alpha h(at)'
        else:
            value = integrate.right(data['f'], data['base'], data['at'],
                                    data['alpha'])
            label = 'J_{base-}^alpha h(at)'

        outputs = {
            'name': 'fracint',
            'terms': [{'label': label, 'value': value}],
            'margins': [],
            'holds': True,
            'converged': integrate.converged,
            'tolerance': integrate.cfg.abs_tol,
            'witness': None,
            'details': {'side': side, 'alpha': float(data['alpha']),
                        'base': data['base'], 'at': data['at']},
            'warnings': list(integrate.failures)
        }
        return 'application/json', outputs

    def __repr__(self):
        return f'<FracIntProcessor> {self.name}'
