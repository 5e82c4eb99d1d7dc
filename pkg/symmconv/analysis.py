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

"""Numerical deciders for p-convexity, symmetrized p-convexity and
p-symmetry of weights

Deciders are one-sided: a failing verdict carries a witness that can be
re-checked with `defect`, a holding verdict only means that no violation
was found at the sampled resolution.
"""

import logging
from multiprocessing import dummy
from typing import Callable, NamedTuple, Tuple, Union

import numpy as np

from symmconv.meanspace import (image_interval, p_reflect, p_sym_transform,
                                power_mean, power_pullback, to_power_coords)
from symmconv.models import (ConvexityVerdict, CrossCheck, GridSpec,
                             Interval, PParam, SymmetryVerdict, Witness)

LOGGER = logging.getLogger(__name__)

Real = Union[float, np.ndarray]
Function = Callable[[Real], Real]


class _Best(NamedTuple):
    value: float
    x: float
    y: float
    t: float

    def beats(self, other: '_Best') -> bool:
        if self.value != other.value:
            return self.value > other.value
        return (self.x, self.y, self.t) < (other.x, other.y, other.t)


def defect(f: Function, x: Real, y: Real, t: Real,
           p: Union[PParam, float]) -> Real:
    """
    Signed violation of the p-convex chord condition at (x, y, t)

    :param f: vectorised callable
    :param x: first point(s)
    :param y: second point(s)
    :param t: weight(s) in [0, 1]
    :param p: exponent

    :returns: f(M) - (t f(x) + (1 - t) f(y)), M the p-power mean;
              positive values witness non-p-convexity
    """

    mean = power_mean(x, y, t, p)
    return f(mean) - (t * f(x) + (1 - t) * f(y))


def harmonic_defect(f: Function, x: Real, y: Real, t: Real) -> Real:
    """
    Signed violation of harmonic convexity at (x, y, t)

    :returns: f(xy / (tx + (1 - t)y)) - (t f(y) + (1 - t) f(x))
    """

    mean = x * y / (t * x + (1 - t) * y)
    return f(mean) - (t * f(y) + (1 - t) * f(x))


def _power_axis(lo: float, hi: float, n: int, p: float,
                interval: Interval) -> np.ndarray:
    """n points uniform in u = x^p over [lo, hi], ascending in x"""

    u = np.linspace(lo, hi, n)
    a, b = interval.a, interval.b
    xs = np.clip(np.power(u, 1.0 / p), a, b)
    xs = np.where(u == np.power(a, p), a,
                  np.where(u == np.power(b, p), b, xs))
    if p < 0:
        xs = xs[::-1]
    return np.ascontiguousarray(xs)


def _scan(f: Function, xs: np.ndarray, ys: np.ndarray, ts: np.ndarray,
          p: float, harmonic: bool, workers: int) -> _Best:
    """worst defect over the tensor grid xs x ys x ts"""

    fx = np.asarray(f(xs), dtype=float)
    fy = np.asarray(f(ys), dtype=float)
    Y = ys[None, :, None]
    T = ts[None, None, :]

    def block(bounds: Tuple[int, int]) -> _Best:
        start, stop = bounds
        X = xs[start:stop, None, None]
        FX = fx[start:stop, None, None]
        FY = fy[None, :, None]
        if harmonic:
            mean = X * Y / (T * X + (1 - T) * Y)
            chord = T * FY + (1 - T) * FX
        else:
            mean = power_mean(X, Y, T, p)
            chord = T * FX + (1 - T) * FY
        values = np.asarray(f(mean), dtype=float) - chord
        if np.any(np.isnan(values)):
            raise AnalysisError('defect is undefined on the sampling grid')
        i, j, k = np.unravel_index(np.argmax(values), values.shape)
        return _Best(float(values[i, j, k]), float(xs[start + i]),
                     float(ys[j]), float(ts[k]))

    if workers <= 1 or len(xs) < 2:
        return block((0, len(xs)))

    edges = np.linspace(0, len(xs), min(workers, len(xs)) + 1).astype(int)
    chunks = [(int(lo), int(hi)) for lo, hi in zip(edges, edges[1:])
              if hi > lo]
    with dummy.Pool(len(chunks)) as pool:
        results = pool.map(block, chunks)

    best = results[0]
    for candidate in results[1:]:
        if candidate.beats(best):
            best = candidate
    return best


def _decide(f: Function, interval: Interval, p: float, grid: GridSpec,
            harmonic: bool = False) -> ConvexityVerdict:
    lo_u, hi_u = image_interval(interval, p)
    n, m = grid.xy_points, grid.t_points

    xs = _power_axis(lo_u, hi_u, n, p, interval)
    ts = np.linspace(0.0, 1.0, m)
    best = _scan(f, xs, xs, ts, p, harmonic, grid.workers)
    samples = n * n * m

    half_u = 0.5 * (hi_u - lo_u)
    half_t = 0.5
    for round_ in range(grid.refine_rounds):
        half_u /= grid.zoom
        half_t /= grid.zoom
        axes = []
        for centre in (best.x, best.y):
            u = float(to_power_coords(centre, p))
            axes.append(_power_axis(max(lo_u, u - half_u),
                                    min(hi_u, u + half_u), n, p, interval))
        ts = np.linspace(max(0.0, best.t - half_t),
                         min(1.0, best.t + half_t), m)
        candidate = _scan(f, axes[0], axes[1], ts, p, harmonic, grid.workers)
        samples += n * n * m
        LOGGER.debug(f'Refinement round {round_ + 1}: {candidate.value!r}')
        if candidate.beats(best):
            best = candidate

    holds = best.value <= grid.defect_tol
    witness = None if holds else Witness(x=best.x, y=best.y, t=best.t)
    LOGGER.debug(f'Worst defect {best.value!r} at ({best.x!r}, {best.y!r}, '
                 f'{best.t!r}) over {samples} samples')

    return ConvexityVerdict(holds=holds, worst_defect=best.value,
                            witness=witness, samples_checked=samples,
                            defect_tol=grid.defect_tol)


def check_p_convex(f: Function, interval: Interval,
                   p: Union[PParam, float],
                   grid: GridSpec = None) -> ConvexityVerdict:
    """
    Decide p-convexity of f on [a, b] by grid search with local refinement

    The (x, y) grid is uniform in power coordinates and the worst defect
    is zoomed into for `grid.refine_rounds` rounds.

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param grid: `GridSpec` (defaults when absent)

    :returns: `ConvexityVerdict`
    """

    interval = Interval.coerce(interval)
    p = float(PParam.coerce(p))
    return _decide(f, interval, p, grid or GridSpec())


def check_symmetrized_p_convex(f: Function, interval: Interval,
                               p: Union[PParam, float],
                               grid: GridSpec = None) -> ConvexityVerdict:
    """
    Decide symmetrized p-convexity: p-convexity of the p-symmetrical
    transform of f

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param grid: `GridSpec`

    :returns: `ConvexityVerdict` for the transform
    """

    return check_p_convex(p_sym_transform(f, interval, p), interval, p, grid)


def check_harmonically_convex(f: Function, interval: Interval,
                              grid: GridSpec = None) -> ConvexityVerdict:
    """
    Decide harmonic convexity, f(xy / (tx + (1-t)y)) <= t f(y) + (1-t) f(x)

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param grid: `GridSpec`

    :returns: `ConvexityVerdict`
    """

    interval = Interval.coerce(interval)
    return _decide(f, interval, -1.0, grid or GridSpec(), harmonic=True)


def check_p_symmetric_weight(w: Function, interval: Interval,
                             p: Union[PParam, float],
                             grid: GridSpec = None) -> SymmetryVerdict:
    """
    Decide whether w equals its p-reflection pullback on [a, b]

    The asymmetry |w(x) - w(p_reflect(x))| is measured relative to
    max(1, sup |w|) on a grid uniform in power coordinates.

    :param w: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param grid: `GridSpec`

    :returns: `SymmetryVerdict`
    """

    interval = Interval.coerce(interval)
    p = float(PParam.coerce(p))
    grid = grid or GridSpec()

    lo_u, hi_u = image_interval(interval, p)
    xs = _power_axis(lo_u, hi_u, grid.xy_points * grid.t_points, p,
                     interval)
    direct = np.asarray(w(xs), dtype=float)
    mirrored = np.asarray(w(p_reflect(xs, interval, p)), dtype=float)

    scale = max(1.0, float(np.max(np.abs(direct))))
    asymmetry = np.abs(direct - mirrored) / scale
    worst = int(np.argmax(asymmetry))
    holds = bool(asymmetry[worst] <= grid.sym_tol)

    return SymmetryVerdict(holds=holds,
                           worst_asymmetry=float(asymmetry[worst]),
                           witness_x=None if holds else float(xs[worst]),
                           samples_checked=len(xs), sym_tol=grid.sym_tol)


def crosscheck_P2_1(f: Function, interval: Interval,
                    p: Union[PParam, float],
                    grid: GridSpec = None) -> CrossCheck:
    """
    Compare symmetrized p-convexity of f on [a, b] with symmetrized
    convexity of u -> f(u^(1/p)) on the ascending image interval

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param grid: `GridSpec`

    :returns: `CrossCheck`, truthy when both verdicts agree
    """

    interval = Interval.coerce(interval)
    p = float(PParam.coerce(p))

    direct = check_symmetrized_p_convex(f, interval, p, grid)
    lo, hi = image_interval(interval, p)
    composed = check_symmetrized_p_convex(
        power_pullback(f, interval, p), Interval(a=lo, b=hi), 1.0, grid)

    if direct.holds != composed.holds:
        LOGGER.warning(f'Direct ({direct.worst_defect!r}) and composed '
                       f'({composed.worst_defect!r}) verdicts disagree')

    return CrossCheck(agrees=direct.holds == composed.holds, direct=direct,
                      composed=composed)


class AnalysisError(Exception):
    """analysis generic error"""
    pass
