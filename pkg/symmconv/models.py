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

"""Domain types shared by the numerical modules and the CLI"""

from enum import Enum
import math
import re
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, root_validator, validator

#: smallest admissible |p|; p = 0 is the excluded geometric limit
P_MIN = 1e-8

#: upper bound on grid evaluations for one decision
MAX_GRID_EVALUATIONS = 10 ** 7

_IDENT = re.compile(r'^[A-Za-z][A-Za-z0-9_]*$')


def _finite(value: float) -> float:
    if not math.isfinite(value):
        raise ValueError('value must be finite')
    return value


class Interval(BaseModel):
    """closed interval [a, b] inside (0, inf)"""

    a: float
    b: float

    class Config:
        frozen = True

    _check_finite = validator('a', 'b', allow_reuse=True)(_finite)

    @root_validator(skip_on_failure=True)
    def check_order(cls, values):
        if not 0 < values['a'] < values['b']:
            raise ValueError('interval requires 0 < a < b')
        return values

    @classmethod
    def coerce(cls, value: Union['Interval', Sequence[float], str]
               ) -> 'Interval':
        """
        Build an interval from an `Interval`, a pair or ``"a,b"`` text

        :param value: interval-like value

        :returns: `Interval`
        """

        if isinstance(value, Interval):
            return value
        if isinstance(value, Mapping):
            return cls(**value)
        if isinstance(value, str):
            value = [v.strip() for v in value.split(',')]
        if len(value) != 2:
            raise ValueError('interval needs exactly two bounds')
        return cls(a=value[0], b=value[1])

    def __repr__(self):
        return f'<Interval> [{self.a}, {self.b}]'


class PParam(BaseModel):
    """exponent p selecting the convexity class"""

    p: float

    class Config:
        frozen = True

    @validator('p')
    def check_p(cls, value):
        _finite(value)
        if abs(value) < P_MIN:
            raise ValueError(f'|p| must be at least {P_MIN} (p = 0 excluded)')
        return value

    @classmethod
    def coerce(cls, value: Union['PParam', float]) -> 'PParam':
        if isinstance(value, PParam):
            return value
        return cls(p=value)

    def __float__(self):
        return self.p

    def __repr__(self):
        return f'<PParam> {self.p}'


class ParamBindings(BaseModel):
    """values of the named parameters of an expression"""

    values: Dict[str, float] = {}

    class Config:
        frozen = True

    @validator('values')
    def check_values(cls, values):
        for name, value in values.items():
            if not _IDENT.match(name) or name == 'x':
                raise ValueError(f'invalid parameter name {name!r}')
            if not math.isfinite(value):
                raise ValueError(f'parameter {name!r} must be finite')
        return values

    @classmethod
    def coerce(cls, value: Union['ParamBindings', Mapping[str, float], None]
               ) -> 'ParamBindings':
        if isinstance(value, ParamBindings):
            return value
        return cls(values=dict(value or {}))


class QuadConfig(BaseModel):
    """adaptive quadrature tolerances and budget"""

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_subdivisions: int = 2000

    class Config:
        frozen = True

    @validator('abs_tol', 'rel_tol')
    def check_tolerance(cls, value):
        if not value > 0:
            raise ValueError('tolerances must be positive')
        return value

    @validator('max_subdivisions')
    def check_budget(cls, value):
        if value < 1:
            raise ValueError('max_subdivisions must be at least 1')
        return value


class FracOrder(BaseModel):
    """order alpha of a fractional integral"""

    alpha: float

    class Config:
        frozen = True

    @validator('alpha')
    def check_alpha(cls, value):
        _finite(value)
        if not value > 0:
            raise ValueError('alpha must be positive')
        return value

    @classmethod
    def coerce(cls, value: Union['FracOrder', float]) -> 'FracOrder':
        if isinstance(value, FracOrder):
            return value
        return cls(alpha=value)

    def __float__(self):
        return self.alpha


class GridSpec(BaseModel):
    """sampling resolution of the numerical deciders"""

    xy_points: int = 41
    t_points: int = 21
    refine_rounds: int = 3
    zoom: float = 5.0
    workers: int = 1
    defect_tol: float = 1e-9
    sym_tol: float = 1e-9

    class Config:
        frozen = True

    @validator('xy_points', 't_points')
    def check_points(cls, value):
        if value < 3:
            raise ValueError('grids need at least 3 points per axis')
        return value

    @validator('refine_rounds')
    def check_rounds(cls, value):
        if value < 0:
            raise ValueError('refine_rounds must be non-negative')
        return value

    @validator('zoom')
    def check_zoom(cls, value):
        if not value > 1:
            raise ValueError('zoom must exceed 1')
        return value

    @validator('workers')
    def check_workers(cls, value):
        if value < 1:
            raise ValueError('workers must be at least 1')
        return value

    @validator('defect_tol', 'sym_tol')
    def check_tolerance(cls, value):
        if not value >= 0:
            raise ValueError('tolerances must be non-negative')
        return value

    @root_validator(skip_on_failure=True)
    def check_budget(cls, values):
        total = (values['xy_points'] ** 2 * values['t_points'] *
                 (values['refine_rounds'] + 1))
        if total > MAX_GRID_EVALUATIONS:
            raise ValueError(f'grid needs {total} evaluations, more than '
                             f'{MAX_GRID_EVALUATIONS}')
        return values


class Witness(BaseModel):
    """point (x, y, t) at which a chord condition fails"""

    x: float
    y: float
    t: float


class ConvexityVerdict(BaseModel):
    """outcome of a convexity decision"""

    holds: bool
    worst_defect: float
    witness: Optional[Witness] = None
    samples_checked: int
    defect_tol: float = 1e-9

    @root_validator(skip_on_failure=True)
    def check_consistency(cls, values):
        if values['holds'] != (values['worst_defect'] <= values['defect_tol']):
            raise ValueError('holds must agree with worst_defect')
        if values['holds'] == (values['witness'] is not None):
            raise ValueError('a witness is present exactly when the '
                             'decision fails')
        return values

    @property
    def conclusion(self) -> str:
        if self.holds:
            return 'no violation found at this resolution'
        return 'violation found (witness re-checkable)'


class SymmetryVerdict(BaseModel):
    """outcome of a p-symmetry decision for a weight"""

    holds: bool
    worst_asymmetry: float
    witness_x: Optional[float] = None
    samples_checked: int
    sym_tol: float = 1e-9

    def __bool__(self):
        return self.holds


class CrossCheck(BaseModel):
    """agreement between a direct decision and its composed counterpart"""

    agrees: bool
    direct: ConvexityVerdict
    composed: ConvexityVerdict

    def __bool__(self):
        return self.agrees


class Term(BaseModel):
    label: str
    value: float


class InequalityReport(BaseModel):
    """evaluated inequality chain"""

    name: str
    terms: List[Term]
    margins: List[float]
    holds: bool
    tolerance_used: float
    integrals: Dict[str, float] = {}
    metadata: Dict[str, Any] = {}
    warnings: List[str] = []
    converged: bool = True
    hypothesis_verified: Optional[bool] = None

    @classmethod
    def from_terms(cls, name: str, terms: Sequence[Tuple[str, float]],
                   tolerance: float, **kwargs) -> 'InequalityReport':
        """
        Build a report from ordered (label, value) pairs

        :param name: chain identifier
        :param terms: ordered `list` of (label, value)
        :param tolerance: chain tolerance
        :param kwargs: further report fields

        :returns: `InequalityReport`
        """

        values = [float(v) for _, v in terms]
        margins = [right - left for left, right in zip(values, values[1:])]
        holds = all(m >= -tolerance for m in margins)
        return cls(name=name,
                   terms=[Term(label=k, value=v)
                          for (k, _), v in zip(terms, values)],
                   margins=margins, holds=holds, tolerance_used=tolerance,
                   **kwargs)

    def values(self) -> List[float]:
        return [term.value for term in self.terms]


class Command(str, Enum):
    CHECK = 'check'
    VERIFY = 'verify'
    TRANSFORM = 'transform'
    FRACINT = 'fracint'
    CORPUS = 'corpus'


class OutputFormat(str, Enum):
    JSON = 'json'
    CSV = 'csv'
    HUMAN = 'human'


#: verify chains built on fractional operators
FRACTIONAL_CHAINS = ('fracfejer', 'fracweight', 'frachh')

#: processors that need a weight
WEIGHTED = ('fejer', 'fracfejer', 'fracweight', 'p-symmetric-weight')

#: kinds evaluated on the weight alone
WEIGHT_ONLY = ('fracweight', 'p-symmetric-weight')

#: kinds with a fixed exponent
FIXED_EXPONENT = ('harmonic-convex', 'harmonic', 'dragomir', 'harmonic-chain')


class RunConfig(BaseModel):
    """one CLI invocation"""

    command: Command
    function_source: Optional[str] = None
    weight_source: Optional[str] = None
    interval: Optional[Interval] = None
    p: Optional[PParam] = None
    alpha: Optional[FracOrder] = None
    grid: GridSpec = GridSpec()
    quad: QuadConfig = QuadConfig()
    output_format: OutputFormat = OutputFormat.JSON
    output_path: Optional[str] = None
    kind: Optional[str] = None
    x: Optional[float] = None
    y: Optional[float] = None
    params: Dict[str, float] = {}
    chain_tol: float = 1e-7
    verify: bool = False
    base: Optional[float] = None
    at: Optional[float] = None
    side: str = 'left'
    points: int = 101
    corpus_path: Optional[str] = None
    pretty: bool = False
    timings: bool = False

    @validator('interval', pre=True)
    def coerce_interval(cls, value):
        return None if value is None else Interval.coerce(value)

    @validator('p', pre=True)
    def coerce_p(cls, value):
        return None if value is None else PParam.coerce(value)

    @validator('alpha', pre=True)
    def coerce_alpha(cls, value):
        return None if value is None else FracOrder.coerce(value)

    @root_validator(skip_on_failure=True)
    def check_requirements(cls, values):
        command = values['command']
        kind = values.get('kind')

        if command == Command.CORPUS:
            return values

        if values.get('function_source') is None and kind not in WEIGHT_ONLY:
            raise ValueError(f'{command.value} requires a function')

        if command == Command.FRACINT:
            for key in ('base', 'at', 'alpha'):
                if values.get(key) is None:
                    raise ValueError(f'fracint requires {key}')
            if values['side'] not in ('left', 'right'):
                raise ValueError('side must be left or right')
            return values

        for key in ('interval', 'p'):
            if key == 'p' and kind in FIXED_EXPONENT:
                continue
            if values.get(key) is None:
                raise ValueError(f'{command.value} requires {key}')

        if command == Command.VERIFY and kind in FRACTIONAL_CHAINS:
            if values.get('alpha') is None:
                raise ValueError(f'{kind} requires alpha')

        if kind in WEIGHTED and values.get('weight_source') is None:
            raise ValueError(f'{kind} requires a weight function')

        if values['points'] < 2:
            raise ValueError('points must be at least 2')

        return values

    def bindings(self) -> Dict[str, float]:
        """parameter values bound into user expressions"""

        bindings = {}
        if self.interval is not None:
            bindings.update(a=self.interval.a, b=self.interval.b)
        if self.p is not None:
            bindings['p'] = self.p.p
        if self.alpha is not None:
            bindings['alpha'] = self.alpha.alpha
        bindings.update(self.params)
        return bindings
