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

"""Adaptive quadrature, fractional integrals and the Gamma function"""

import heapq
import logging
import math
from typing import Callable, List, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel

from symmconv.models import FracOrder, Interval, PParam, QuadConfig

LOGGER = logging.getLogger(__name__)

# Kronrod 15-point abscissae (non-negative half, descending) and weights
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000
])

_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714
])

# Gauss 7-point weights, at the odd Kronrod abscissae
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
_gauss_half = np.array([_WG[k // 2] if k % 2 else 0.0 for k in range(8)])
GAUSS_WEIGHTS = np.concatenate([_gauss_half[:-1], _gauss_half[::-1]])

_LANCZOS_G = 7
_LANCZOS_P = (0.99999999999980993, 676.5203681218851, -1259.1392167224028,
              771.32342877765313, -176.61502916214059, 12.507343278686905,
              -0.13857109526572012, 9.9843695780195716e-6,
              1.5056327351493116e-7)

Real = Union[float, np.ndarray]


class QuadInfo(BaseModel):
    """diagnostics of one adaptive quadrature"""

    abserr: float
    converged: bool
    subdivisions: int
    evaluations: int


def _sample(g: Callable[[Real], Real], xs: np.ndarray) -> np.ndarray:
    values = np.asarray(g(xs), dtype=float)
    values = np.array(np.broadcast_to(values, xs.shape), dtype=float)
    if not np.all(np.isfinite(values)):
        bad = float(xs[~np.isfinite(values)][0])
        raise QuadratureDomainError(f'integrand is not finite at {bad!r}')
    return values


def _gauss_kronrod(g: Callable[[Real], Real], lo: float,
                   hi: float) -> Tuple[float, float]:
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    values = _sample(g, center + half * NODES)
    kronrod = half * float(KRONROD_WEIGHTS @ values)
    gauss = half * float(GAUSS_WEIGHTS @ values)
    return kronrod, abs(kronrod - gauss)


def integrate_adaptive(g: Callable[[Real], Real], lo: float, hi: float,
                       cfg: QuadConfig = None, full_output: bool = False
                       ) -> Union[float, Tuple[float, QuadInfo]]:
    """
    Integrate g over [lo, hi] by globally adaptive Gauss-Kronrod 7-15

    The segment with the largest error estimate is bisected until the
    summed estimate drops below max(abs_tol, rel_tol * |E|) or the
    subdivision budget runs out. A best estimate is returned in both
    cases; `QuadInfo.converged` tells them apart.

    :param g: vectorised integrand
    :param lo: lower bound (lo > hi integrates the reversed interval
               and negates)
    :param hi: upper bound
    :param cfg: `QuadConfig` (defaults when absent)
    :param full_output: also return `QuadInfo`

    :returns: `float`, or (`float`, `QuadInfo`) with full_output
    """

    cfg = cfg or QuadConfig()
    lo = float(lo)
    hi = float(hi)
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise QuadratureDomainError('integration bounds must be finite')

    if lo == hi:
        info = QuadInfo(abserr=0.0, converged=True, subdivisions=0,
                        evaluations=0)
        return (0.0, info) if full_output else 0.0

    sign = 1.0
    if lo > hi:
        lo, hi = hi, lo
        sign = -1.0

    value, error = _gauss_kronrod(g, lo, hi)
    heap = [(-error, 0, lo, hi, value)]
    total, total_error = value, error
    subdivisions = 0
    evaluations = len(NODES)
    converged = True

    while total_error > max(cfg.abs_tol, cfg.rel_tol * abs(total)):
        if subdivisions >= cfg.max_subdivisions:
            converged = False
            break
        neg_error, _, left, right, part = heapq.heappop(heap)
        middle = 0.5 * (left + right)
        if not left < middle < right:
            # segment below floating point resolution
            heapq.heappush(heap, (neg_error, subdivisions, left, right, part))
            converged = False
            break

        subdivisions += 1
        value_l, error_l = _gauss_kronrod(g, left, middle)
        value_r, error_r = _gauss_kronrod(g, middle, right)
        evaluations += 2 * len(NODES)

        total += value_l + value_r - part
        total_error += error_l + error_r + neg_error
        heapq.heappush(heap, (-error_l, 2 * subdivisions - 1, left, middle,
                              value_l))
        heapq.heappush(heap, (-error_r, 2 * subdivisions, middle, right,
                              value_r))

    total = math.fsum(item[4] for item in heap)
    total_error = math.fsum(-item[0] for item in heap)

    if not converged:
        LOGGER.warning(f'Quadrature on [{lo!r}, {hi!r}] stopped after '
                       f'{subdivisions} subdivisions (abserr {total_error!r})')

    result = sign * total
    if full_output:
        return result, QuadInfo(abserr=total_error, converged=converged,
                                subdivisions=subdivisions,
                                evaluations=evaluations)
    return result


def cumulative_integrals(g: Callable[[Real], Real], lo: float,
                         points: Sequence[float], cfg: QuadConfig = None,
                         full_output: bool = False):
    """
    Primitive G(x) = integral of g over [lo, x] at ascending points

    :param g: vectorised integrand
    :param lo: base point
    :param points: ascending points at or above lo
    :param cfg: `QuadConfig`
    :param full_output: also return a merged `QuadInfo`

    :returns: numpy array, or (array, `QuadInfo`) with full_output
    """

    points = np.asarray(points, dtype=float)
    if np.any(np.diff(points) < 0) or (points.size and points[0] < lo):
        raise QuadratureDomainError('points must ascend from the base point')

    primitives = np.empty_like(points)
    running = 0.0
    start = lo
    merged = QuadInfo(abserr=0.0, converged=True, subdivisions=0,
                      evaluations=0)
    for i, point in enumerate(points):
        piece, info = integrate_adaptive(g, start, point, cfg,
                                         full_output=True)
        running += piece
        primitives[i] = running
        start = point
        merged = QuadInfo(abserr=merged.abserr + info.abserr,
                          converged=merged.converged and info.converged,
                          subdivisions=merged.subdivisions + info.subdivisions,
                          evaluations=merged.evaluations + info.evaluations)

    if full_output:
        return primitives, merged
    return primitives


def gauss_legendre(n: int, lo: float, hi: float
                   ) -> Tuple[np.ndarray, np.ndarray]:
    """
    Gauss-Legendre rule on [lo, hi] with weights normalised to one

    :param n: number of nodes
    :param lo: lower bound
    :param hi: upper bound

    :returns: (nodes, weights), nodes ascending
    """

    if n < 1:
        raise QuadratureError('Gauss-Legendre rules need at least one node')
    x, w = np.polynomial.legendre.leggauss(n)
    return lo + 0.5 * (hi - lo) * (x + 1.0), 0.5 * w


def p_weighted_integral(f: Callable[[Real], Real], interval: Interval,
                        p: Union[PParam, float], cfg: QuadConfig = None,
                        full_output: bool = False):
    """
    Normalised weighted mean p / (b^p - a^p) * integral of f(x) x^(p-1)

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param cfg: `QuadConfig`
    :param full_output: also return `QuadInfo`

    :returns: `float`, or (`float`, `QuadInfo`) with full_output
    """

    interval = Interval.coerce(interval)
    p = float(PParam.coerce(p))
    a, b = interval.a, interval.b

    def integrand(x):
        return np.asarray(f(x), dtype=float) * np.power(x, p - 1.0)

    raw, info = integrate_adaptive(integrand, a, b, cfg, full_output=True)
    value = p / (b ** p - a ** p) * raw
    if full_output:
        return value, info
    return value


def _fractional(h: Callable[[Real], Real], base: float, at: float,
                alpha: Union[FracOrder, float], cfg: QuadConfig,
                left: bool) -> Tuple[float, QuadInfo]:
    alpha = float(FracOrder.coerce(alpha))
    base = float(base)
    at = float(at)
    lo, hi = (base, at) if left else (at, base)
    if not lo <= hi:
        side = 'left' if left else 'right'
        order = 'base < at' if left else 'at < base'
        raise QuadratureDomainError(f'{side}-sided integral needs {order}')
    if lo == hi:
        return 0.0, QuadInfo(abserr=0.0, converged=True, subdivisions=0,
                             evaluations=0)

    if alpha < 1:
        # u = |at - t|^alpha removes the kernel singularity at t = at
        def integrand(u):
            offset = np.power(u, 1.0 / alpha)
            t = at - offset if left else at + offset
            return h(np.clip(t, lo, hi))

        raw, info = integrate_adaptive(integrand, 0.0, (hi - lo) ** alpha,
                                       cfg, full_output=True)
        return raw / gamma(alpha + 1.0), info

    def integrand(t):
        return (np.power(np.abs(at - t), alpha - 1.0) *
                np.asarray(h(t), dtype=float))

    raw, info = integrate_adaptive(integrand, lo, hi, cfg, full_output=True)
    return raw / gamma(alpha), info


def frac_integral_left(h: Callable[[Real], Real], base: float, at: float,
                       alpha: Union[FracOrder, float], cfg: QuadConfig = None,
                       full_output: bool = False):
    """
    Left-sided fractional integral
    J_{base+}^alpha h(at) = 1/Gamma(alpha) * int_base^at (at-t)^(alpha-1) h(t)

    :param h: vectorised callable on [base, at]
    :param base: lower end
    :param at: evaluation point, base <= at
    :param alpha: order
    :param cfg: `QuadConfig`
    :param full_output: also return `QuadInfo`

    :returns: `float`, or (`float`, `QuadInfo`) with full_output
    """

    value, info = _fractional(h, base, at, alpha, cfg, left=True)
    return (value, info) if full_output else value


def frac_integral_right(h: Callable[[Real], Real], base: float, at: float,
                        alpha: Union[FracOrder, float], cfg: QuadConfig = None,
                        full_output: bool = False):
    """
    Right-sided fractional integral
    J_{base-}^alpha h(at) = 1/Gamma(alpha) * int_at^base (t-at)^(alpha-1) h(t)

    :param h: vectorised callable on [at, base]
    :param base: upper end
    :param at: evaluation point, at <= base
    :param alpha: order
    :param cfg: `QuadConfig`
    :param full_output: also return `QuadInfo`

    :returns: `float`, or (`float`, `QuadInfo`) with full_output
    """

    value, info = _fractional(h, base, at, alpha, cfg, left=False)
    return (value, info) if full_output else value


def gamma(x: float) -> float:
    """
    Gamma function by the Lanczos approximation (g = 7, 9 coefficients)

    :param x: positive argument

    :returns: `float`
    """

    x = float(x)
    if not x > 0 or not math.isfinite(x):
        raise QuadratureDomainError(f'gamma needs a positive argument, '
                                    f'got {x!r}')
    if x == int(x) and x <= 21:
        return float(math.factorial(int(x) - 1))
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))

    x -= 1.0
    series = _LANCZOS_P[0]
    for i in range(1, _LANCZOS_G + 2):
        series += _LANCZOS_P[i] / (x + i)
    t = x + _LANCZOS_G + 0.5

    if x < 140:
        return math.sqrt(2 * math.pi) * t ** (x + 0.5) * math.exp(-t) * series
    log_value = (0.5 * math.log(2 * math.pi) + (x + 0.5) * math.log(t) - t +
                 math.log(series))
    if log_value > 709.78:
        raise QuadratureDomainError(f'gamma overflows at {x + 1.0!r}')
    return math.exp(log_value)


class Integrator:
    """Call-local quadrature front end recording non-convergence"""

    def __init__(self, cfg: QuadConfig = None):
        self.cfg = cfg or QuadConfig()
        self.failures: List[str] = []

    def _record(self, label: str, info: QuadInfo):
        if not info.converged:
            self.failures.append(f'{label} did not converge '
                                 f'(abserr {info.abserr!r})')

    @property
    def converged(self) -> bool:
        return not self.failures

    def __call__(self, g: Callable[[Real], Real], lo: float, hi: float,
                 label: str = 'integral') -> float:
        value, info = integrate_adaptive(g, lo, hi, self.cfg,
                                         full_output=True)
        self._record(label, info)
        return value

    def cumulative(self, g: Callable[[Real], Real], lo: float,
                   points: Sequence[float],
                   label: str = 'primitive') -> np.ndarray:
        values, info = cumulative_integrals(g, lo, points, self.cfg,
                                            full_output=True)
        self._record(label, info)
        return values

    def weighted(self, f: Callable[[Real], Real], interval: Interval,
                 p: Union[PParam, float],
                 label: str = 'weighted integral') -> float:
        value, info = p_weighted_integral(f, interval, p, self.cfg,
                                          full_output=True)
        self._record(label, info)
        return value

    def left(self, h: Callable[[Real], Real], base: float, at: float,
             alpha: Union[FracOrder, float],
             label: str = 'left fractional integral') -> float:
        value, info = frac_integral_left(h, base, at, alpha, self.cfg,
                                         full_output=True)
        self._record(label, info)
        return value

    def right(self, h: Callable[[Real], Real], base: float, at: float,
              alpha: Union[FracOrder, float],
              label: str = 'right fractional integral') -> float:
        value, info = frac_integral_right(h, base, at, alpha, self.cfg,
                                          full_output=True)
        self._record(label, info)
        return value


class QuadratureError(Exception):
    """quadrature generic error"""
    pass


class QuadratureDomainError(QuadratureError):
    """invalid bounds or argument"""
    pass
