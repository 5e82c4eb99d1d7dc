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

"""p-power means, p-reflections and the symmetrical transform family"""

import logging
from typing import Callable, Tuple, Union

import numpy as np

from symmconv.models import Interval, PParam

LOGGER = logging.getLogger(__name__)

Real = Union[float, np.ndarray]

#: reflected values closer than this many ulps to [a, b] are clamped
CLAMP_ULPS = 4


def _p(p: Union[PParam, float]) -> float:
    return float(PParam.coerce(p))


def _out(value: np.ndarray, scalar: bool) -> Real:
    if scalar:
        return float(value)
    return value


def to_power_coords(x: Real, p: Union[PParam, float]) -> Real:
    """
    Map points of (0, inf) to power coordinates u = x^p

    :param x: `float` or numpy array of positive points
    :param p: exponent

    :returns: u with the shape of x
    """

    scalar = np.ndim(x) == 0
    xs = np.asarray(x, dtype=float)
    if np.any(xs <= 0):
        raise MeanSpaceError('power coordinates need positive points')
    return _out(np.power(xs, _p(p)), scalar)


def from_power_coords(u: Real, p: Union[PParam, float]) -> Real:
    """
    Inverse of `to_power_coords`: x = u^(1/p)

    :param u: `float` or numpy array of positive power coordinates
    :param p: exponent

    :returns: x with the shape of u
    """

    scalar = np.ndim(u) == 0
    us = np.asarray(u, dtype=float)
    if np.any(us <= 0):
        raise MeanSpaceError('power coordinates must be positive')
    return _out(np.power(us, 1.0 / _p(p)), scalar)


def image_interval(interval: Interval, p: Union[PParam, float]
                   ) -> Tuple[float, float]:
    """
    Ascending image of [a, b] under x -> x^p

    :param interval: `Interval`
    :param p: exponent

    :returns: `tuple` (lo, hi)
    """

    interval = Interval.coerce(interval)
    ends = to_power_coords(np.array([interval.a, interval.b]), p)
    return float(ends.min()), float(ends.max())


def power_mean(x: Real, y: Real, t: Real,
               p: Union[PParam, float]) -> Real:
    """
    Weighted p-power mean [t x^p + (1 - t) y^p]^(1/p)

    Arguments broadcast against each other.

    :param x: first point(s), positive
    :param y: second point(s), positive
    :param t: weight(s) in [0, 1]
    :param p: exponent

    :returns: the mean, between min(x, y) and max(x, y)
    """

    scalar = all(np.ndim(v) == 0 for v in (x, y, t))
    p = _p(p)
    xs = np.asarray(x, dtype=float)
    ys = np.asarray(y, dtype=float)
    ts = np.asarray(t, dtype=float)

    if np.any(xs <= 0) or np.any(ys <= 0):
        raise MeanSpaceError('power means need positive points')
    if np.any((ts < 0) | (ts > 1)):
        raise MeanSpaceError('mean weight must lie in [0, 1]')

    mean = np.power(ts * np.power(xs, p) + (1 - ts) * np.power(ys, p),
                    1.0 / p)
    # rounding may leave the mean an ulp outside the chord
    mean = np.clip(mean, np.minimum(xs, ys), np.maximum(xs, ys))
    return _out(mean, scalar)


def p_midpoint(interval: Interval, p: Union[PParam, float]) -> float:
    """
    p-midpoint [(a^p + b^p) / 2]^(1/p) of an interval

    :param interval: `Interval`
    :param p: exponent

    :returns: `float` in (a, b)
    """

    interval = Interval.coerce(interval)
    return power_mean(interval.a, interval.b, 0.5, p)


def _check_inside(xs: np.ndarray, interval: Interval):
    outside = (xs < interval.a) | (xs > interval.b) | np.isnan(xs)
    if np.any(outside):
        bad = float(xs[outside].flat[0])
        raise ReflectionDomainError(
            f'{bad!r} lies outside [{interval.a!r}, {interval.b!r}]')


def _clamp(values: np.ndarray, interval: Interval) -> np.ndarray:
    a, b = interval.a, interval.b
    low = a - CLAMP_ULPS * np.spacing(a)
    high = b + CLAMP_ULPS * np.spacing(b)
    stray = (values < low) | (values > high) | ~np.isfinite(values)
    if np.any(stray):
        bad = float(values[stray].flat[0])
        raise ReflectionDomainError(
            f'reflected value {bad!r} escapes [{a!r}, {b!r}]')
    return np.clip(values, a, b)


def p_reflect(x: Real, interval: Interval,
              p: Union[PParam, float]) -> Real:
    """
    p-reflection x -> [a^p + b^p - x^p]^(1/p) of [a, b]

    Endpoints swap exactly.

    :param x: `float` or numpy array of points in [a, b]
    :param interval: `Interval`
    :param p: exponent

    :returns: reflected point(s) in [a, b]
    """

    interval = Interval.coerce(interval)
    p = _p(p)
    scalar = np.ndim(x) == 0
    xs = np.asarray(x, dtype=float)
    _check_inside(xs, interval)

    a, b = interval.a, interval.b
    total = np.power(a, p) + np.power(b, p)
    reflected = np.power(total - np.power(xs, p), 1.0 / p)
    reflected = np.where(xs == a, b, np.where(xs == b, a, reflected))
    return _out(_clamp(np.asarray(reflected, dtype=float), interval), scalar)


class PTransform:
    """p-symmetrical (or anti p-symmetrical) transform of a function.

    Immutable closure over (f, I, p); callable on floats and arrays."""

    def __init__(self, f: Callable[[Real], Real], interval: Interval,
                 p: Union[PParam, float], anti: bool = False):
        """
        Initialize object

        :param f: vectorised callable on [a, b]
        :param interval: `Interval`
        :param p: exponent
        :param anti: build the anti-symmetrical transform

        :returns: `symmconv.meanspace.PTransform`
        """

        self.f = f
        self.interval = Interval.coerce(interval)
        self.p = _p(p)
        self.anti = anti

    def reflect(self, x: Real) -> Real:
        return p_reflect(x, self.interval, self.p)

    def __call__(self, x: Real) -> Real:
        scalar = np.ndim(x) == 0
        xs = np.asarray(x, dtype=float)
        direct = np.asarray(self.f(xs), dtype=float)
        mirrored = np.asarray(self.f(self.reflect(xs)), dtype=float)
        if self.anti:
            value = 0.5 * (direct - mirrored)
        else:
            value = 0.5 * (direct + mirrored)
        return _out(value, scalar)

    def __repr__(self):
        kind = 'AP' if self.anti else 'P'
        return (f'<PTransform> {kind}({self.f!r}; p={self.p!r}) on '
                f'[{self.interval.a!r}, {self.interval.b!r}]')


def p_sym_transform(f: Callable[[Real], Real], interval: Interval,
                    p: Union[PParam, float]) -> PTransform:
    """
    p-symmetrical transform P(x) = [f(x) + f(p_reflect(x))] / 2

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent

    :returns: `PTransform`
    """

    return PTransform(f, interval, p)


def p_antisym_transform(f: Callable[[Real], Real], interval: Interval,
                        p: Union[PParam, float]) -> PTransform:
    """
    anti p-symmetrical transform AP(x) = [f(x) - f(p_reflect(x))] / 2

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent

    :returns: `PTransform`
    """

    return PTransform(f, interval, p, anti=True)


def _classical(f: Callable[[Real], Real], interval: Interval,
               sign: float) -> Callable[[Real], Real]:
    interval = Interval.coerce(interval)
    a, b = interval.a, interval.b

    def transform(x: Real) -> Real:
        scalar = np.ndim(x) == 0
        xs = np.asarray(x, dtype=float)
        _check_inside(xs, interval)
        mirrored = np.clip(a + b - xs, a, b)
        value = 0.5 * (np.asarray(f(xs), dtype=float) +
                       sign * np.asarray(f(mirrored), dtype=float))
        return _out(value, scalar)

    return transform


def sym_transform(f: Callable[[Real], Real],
                  interval: Interval) -> Callable[[Real], Real]:
    """classical symmetrical transform [f(x) + f(a + b - x)] / 2"""

    return _classical(f, interval, 1.0)


def antisym_transform(f: Callable[[Real], Real],
                      interval: Interval) -> Callable[[Real], Real]:
    """classical anti-symmetrical transform [f(x) - f(a + b - x)] / 2"""

    return _classical(f, interval, -1.0)


def harmonic_sym_transform(f: Callable[[Real], Real],
                           interval: Interval) -> Callable[[Real], Real]:
    """
    Harmonic symmetrical transform [f(x) + f(abx / ((a + b)x - ab))] / 2

    Restricted to real-valued f.

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`

    :returns: callable
    """

    interval = Interval.coerce(interval)
    a, b = interval.a, interval.b

    def transform(x: Real) -> Real:
        scalar = np.ndim(x) == 0
        xs = np.asarray(x, dtype=float)
        _check_inside(xs, interval)
        mirrored = a * b * xs / ((a + b) * xs - a * b)
        mirrored = np.where(xs == a, b, np.where(xs == b, a, mirrored))
        mirrored = _clamp(np.asarray(mirrored, dtype=float), interval)
        value = 0.5 * (np.asarray(f(xs), dtype=float) +
                       np.asarray(f(mirrored), dtype=float))
        return _out(value, scalar)

    return transform


def power_pullback(f: Callable[[Real], Real], interval: Interval,
                   p: Union[PParam, float]) -> Callable[[Real], Real]:
    """
    Composition u -> f(u^(1/p)) on the image interval of [a, b]

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent

    :returns: callable on `image_interval(interval, p)`
    """

    interval = Interval.coerce(interval)
    p = _p(p)

    def composed(u: Real) -> Real:
        scalar = np.ndim(u) == 0
        xs = _clamp(np.asarray(from_power_coords(np.asarray(u, dtype=float),
                                                 p), dtype=float), interval)
        return _out(np.asarray(f(xs), dtype=float), scalar)

    return composed


class MeanSpaceError(Exception):
    """mean space generic error"""
    pass


class ReflectionDomainError(MeanSpaceError):
    """point outside the reflected interval"""
    pass
