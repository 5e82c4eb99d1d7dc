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

"""Inequality chains as processes

One processor class serves every chain; the plugin name selects the
chain from `CHAINS`.
"""

import logging
from typing import Callable, NamedTuple, Tuple

from symmconv.inequalities import (dragomir_chain, fejer_fractional,
                                   fejer_weighted, fractional_hh,
                                   fractional_weight_bounds, harmonic_chain,
                                   hh_harmonic, hh_p_convex,
                                   hh_subinterval_chain,
                                   hh_symmetrized, pconvex_double_refinement,
                                   reflected_pair_bound, refinement_integral,
                                   transform_bounds, transform_extrema_report)
from symmconv.models import InequalityReport
from symmconv.process.base import (BaseProcessor, ProcessorExecuteError,
                                   report_outputs)

LOGGER = logging.getLogger(__name__)


class Chain(NamedTuple):
    title: str
    inputs: Tuple[str, ...]
    evaluate: Callable[[dict], InequalityReport]


def _common(d: dict) -> dict:
    return {'cfg': d.get('cfg'), 'chain_tol': d['chain_tol']}


CHAINS = {
    'hh': Chain(
        'Hermite-Hadamard chain for p-convex functions',
        ('f', 'interval', 'p'),
        lambda d: hh_p_convex(d['f'], d['interval'], d['p'], **_common(d))),
    'symmetrized': Chain(
        'Hermite-Hadamard chain for symmetrized p-convex functions',
        ('f', 'interval', 'p'),
        lambda d: hh_symmetrized(d['f'], d['interval'], d['p'],
                                 verify=d.get('verify', False),
                                 grid=d.get('grid'), **_common(d))),
    'harmonic': Chain(
        'Hermite-Hadamard chain for harmonically convex functions',
        ('f', 'interval'),
        lambda d: hh_harmonic(d['f'], d['interval'], **_common(d))),
    'bounds': Chain(
        'Pointwise bounds of the p-symmetrical transform',
        ('f', 'interval', 'p', 'x'),
        lambda d: transform_bounds(d['f'], d['interval'], d['p'], d['x'],
                                   chain_tol=d['chain_tol'])),
    'extrema': Chain(
        'Extrema of the p-symmetrical transform',
        ('f', 'interval', 'p'),
        lambda d: transform_extrema_report(d['f'], d['interval'], d['p'],
                                           d.get('grid'),
                                           chain_tol=d['chain_tol'])),
    'fejer': Chain(
        'Weighted (Fejer) chain',
        ('f', 'w', 'interval', 'p'),
        lambda d: fejer_weighted(d['f'], d['w'], d['interval'], d['p'],
                                 grid=d.get('grid'), **_common(d))),
    'chain': Chain(
        'Subinterval chain over [x, y] and its p-reflection',
        ('f', 'interval', 'p', 'x', 'y'),
        lambda d: hh_subinterval_chain(d['f'], d['interval'], d['p'],
                                       d['x'], d['y'], **_common(d))),
    'dragomir': Chain(
        'Subinterval chain for symmetrized convex functions',
        ('f', 'interval', 'x', 'y'),
        lambda d: dragomir_chain(d['f'], d['interval'], d['x'], d['y'],
                                 **_common(d))),
    'harmonic-chain': Chain(
        'Subinterval chain for symmetrized harmonically convex functions',
        ('f', 'interval', 'x', 'y'),
        lambda d: harmonic_chain(d['f'], d['interval'], d['x'], d['y'],
                                 **_common(d))),
    'reflected': Chain(
        'Reflected pair bound',
        ('f', 'interval', 'p', 'x'),
        lambda d: reflected_pair_bound(d['f'], d['interval'], d['p'],
                                       d['x'], **_common(d))),
    'refinement': Chain(
        'Refinement of the left Hermite-Hadamard inequality',
        ('f', 'interval', 'p'),
        lambda d: refinement_integral(d['f'], d['interval'], d['p'],
                                      **_common(d))),
    'double': Chain(
        'Double refinement for p-convex functions',
        ('f', 'interval', 'p'),
        lambda d: pconvex_double_refinement(d['f'], d['interval'], d['p'],
                                            **_common(d))),
    'fracfejer': Chain(
        'Fractional Fejer chain',
        ('f', 'w', 'interval', 'p', 'alpha'),
        lambda d: fejer_fractional(d['f'], d['w'], d['interval'], d['p'],
                                   d['alpha'], grid=d.get('grid'),
                                   **_common(d))),
    'fracweight': Chain(
        'Bounds of the fractional weight mass',
        ('w', 'interval', 'p', 'alpha'),
        lambda d: fractional_weight_bounds(d['w'], d['interval'], d['p'],
                                           d['alpha'], grid=d.get('grid'),
                                           **_common(d))),
    'frachh': Chain(
        'Fractional Hermite-Hadamard chain',
        ('f', 'interval', 'p', 'alpha'),
        lambda d: fractional_hh(d['f'], d['interval'], d['p'], d['alpha'],
                                **_common(d)))
}


def chain_metadata(id_: str) -> dict:
    """
    Process metadata of a chain

    :param id_: chain identifier

    :returns: `dict` of process metadata
    """

    chain = CHAINS[id_]
    return {'id': id_, 'title': chain.title,
            'inputs': ('chain_tol',) + chain.inputs}


class InequalityProcessor(BaseProcessor):
    """evaluates one inequality chain"""

    def __init__(self, processor_def: dict):
        """
        Initialize object

        :param processor_def: processor definition, its name a key of
                              `CHAINS`

        :returns: symmconv.process.chains.InequalityProcessor
        """

        if processor_def['name'] not in CHAINS:
            raise ProcessorExecuteError(
                f'unknown chain {processor_def["name"]!r}')
        super().__init__(processor_def, chain_metadata(processor_def['name']))
        self.chain = CHAINS[self.name]

    def execute(self, data: dict):
        self.require(data)
        LOGGER.debug(f'Evaluating chain {self.name}')
        report = self.chain.evaluate(data)
        return 'application/json', report_outputs(report)

    def __repr__(self):
        return f'<InequalityProcessor> {self.name}'
