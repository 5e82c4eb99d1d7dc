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

import math

import numpy as np
from pydantic import ValidationError
import pytest

from symmconv.expr import parse
from symmconv.meanspace import (MeanSpaceError, PTransform,
                                ReflectionDomainError, antisym_transform,
                                from_power_coords, harmonic_sym_transform,
                                image_interval, p_antisym_transform,
                                p_midpoint, p_reflect, p_sym_transform,
                                power_mean, power_pullback, sym_transform,
                                to_power_coords)
from symmconv.models import Interval, PParam

EXPONENTS = [-2.0, -1.0, 0.5, 1.0, 2.0, 3.0]


@pytest.fixture()
def interval():
    return Interval(a=1.0, b=3.0)


def test_power_coords():
    assert to_power_coords(2.0, 2) == 4.0
    assert from_power_coords(4.0, 2) == 2.0
    assert to_power_coords(2.0, -1) == 0.5
    np.testing.assert_allclose(
        from_power_coords(to_power_coords(np.array([1.0, 2.5]), -2), -2),
        [1.0, 2.5])

    with pytest.raises(MeanSpaceError):
        to_power_coords(0.0, 1)
    with pytest.raises(MeanSpaceError):
        from_power_coords(-1.0, 1)


def test_image_interval():
    assert image_interval(Interval(a=1, b=2), -1) == (0.5, 1.0)
    assert image_interval(Interval(a=1, b=2), 2) == (1.0, 4.0)


def test_power_mean():
    assert power_mean(1.0, 4.0, 0.5, 1) == 2.5
    assert power_mean(1.0, 4.0, 0.5, -1) == pytest.approx(1.6)
    assert power_mean(1.0, 2.0, 0.5, 2) == pytest.approx(math.sqrt(2.5))
    assert power_mean(2.0, 3.0, 1.0, 3) == pytest.approx(2.0)
    assert power_mean(2.0, 3.0, 0.0, -2) == pytest.approx(3.0)
    assert power_mean(2.0, 2.0, 0.3, 0.5) == 2.0

    means = power_mean(np.array([1.0, 1.0]), np.array([2.0, 3.0]), 0.5, 1)
    np.testing.assert_allclose(means, [1.5, 2.0])

    with pytest.raises(MeanSpaceError):
        power_mean(1.0, 2.0, 1.5, 1)
    with pytest.raises(MeanSpaceError):
        power_mean(-1.0, 2.0, 0.5, 1)


def test_power_mean_stays_on_chord():
    rng = np.random.default_rng(7)
    xs = rng.uniform(0.1, 10, 200)
    ys = rng.uniform(0.1, 10, 200)
    ts = rng.uniform(0, 1, 200)
    for p in EXPONENTS:
        means = power_mean(xs, ys, ts, p)
        assert np.all(means >= np.minimum(xs, ys))
        assert np.all(means <= np.maximum(xs, ys))


@pytest.mark.parametrize('p', EXPONENTS)
def test_power_mean_swaps_with_weight(p):
    rng = np.random.default_rng(11)
    xs = rng.uniform(0.1, 10, 200)
    ys = rng.uniform(0.1, 10, 200)
    ts = rng.uniform(0, 1, 200)
    np.testing.assert_allclose(power_mean(xs, ys, ts, p),
                               power_mean(ys, xs, 1 - ts, p), rtol=1e-12)
    assert power_mean(2.0, 5.0, 0.25, p) == \
        pytest.approx(power_mean(5.0, 2.0, 0.75, p), rel=1e-14)


def test_p_zero_rejected():
    with pytest.raises(ValidationError):
        PParam.coerce(0)
    with pytest.raises(ValidationError):
        p_midpoint(Interval(a=1, b=2), 1e-12)


def test_p_midpoint():
    assert p_midpoint(Interval(a=1, b=3), 1) == 2.0
    assert p_midpoint(Interval(a=1, b=2), -1) == pytest.approx(4 / 3)
    assert p_midpoint(Interval(a=1, b=3), 2) == pytest.approx(math.sqrt(5))


@pytest.mark.parametrize('p', EXPONENTS)
def test_p_reflect(interval, p):
    assert p_reflect(interval.a, interval, p) == interval.b
    assert p_reflect(interval.b, interval, p) == interval.a

    mid = p_midpoint(interval, p)
    assert p_reflect(mid, interval, p) == pytest.approx(mid, abs=1e-12)

    xs = np.linspace(interval.a, interval.b, 51)
    reflected = p_reflect(xs, interval, p)
    assert np.all((reflected >= interval.a) & (reflected <= interval.b))
    np.testing.assert_allclose(p_reflect(reflected, interval, p), xs,
                               rtol=0, atol=1e-12)
    np.testing.assert_allclose(
        np.power(xs, p) + np.power(reflected, p),
        np.power(interval.a, p) + np.power(interval.b, p), rtol=1e-12)


def test_p_reflect_outside(interval):
    with pytest.raises(ReflectionDomainError):
        p_reflect(0.5, interval, 1)
    with pytest.raises(ReflectionDomainError):
        p_reflect(np.array([1.5, 3.5]), interval, -1)
    with pytest.raises(ReflectionDomainError):
        p_reflect(float('nan'), interval, 2)


@pytest.mark.parametrize('p', EXPONENTS)
def test_transform_decomposition(interval, p):
    f = parse('exp(x) + x^3')
    P = p_sym_transform(f, interval, p)
    AP = p_antisym_transform(f, interval, p)
    assert isinstance(P, PTransform)

    xs = np.linspace(interval.a, interval.b, 41)
    np.testing.assert_allclose(P(xs) + AP(xs), f(xs), rtol=1e-13)

    reflected = p_reflect(xs, interval, p)
    np.testing.assert_allclose(P(reflected), P(xs), rtol=1e-12)
    np.testing.assert_allclose(AP(reflected), -AP(xs), rtol=1e-10,
                               atol=1e-10)
    assert P(interval.a) == P(interval.b)


def test_transform_of_symmetric_function(interval):
    # x^p + (S - x^p) is constant, so P is constant and AP is odd about
    # the p-midpoint
    f = parse('x^2')
    P = p_sym_transform(f, interval, 2)
    np.testing.assert_allclose(P(np.linspace(1, 3, 9)), 5.0, rtol=1e-14)
    assert isinstance(P(2.0), float)


def test_classical_transforms(interval):
    f = parse('x^2')
    P = sym_transform(f, interval)
    AP = antisym_transform(f, interval)
    assert P(1.0) == 5.0
    assert AP(1.0) == -4.0
    assert P(2.0) == 4.0

    with pytest.raises(ReflectionDomainError):
        P(4.0)

    pgen = p_sym_transform(f, interval, 1)
    xs = np.linspace(1, 3, 17)
    np.testing.assert_allclose(P(xs), pgen(xs), rtol=1e-14)


def test_harmonic_transform():
    interval = Interval(a=1, b=2)
    f = parse('-ln(x)')
    H = harmonic_sym_transform(f, interval)
    P = p_sym_transform(f, interval, -1)
    xs = np.linspace(1, 2, 21)
    np.testing.assert_allclose(H(xs), P(xs), rtol=1e-12)
    assert H(1.0) == pytest.approx(-math.log(2) / 2)


def test_power_pullback():
    interval = Interval(a=1, b=2)
    f = parse('x^3')
    phi = power_pullback(f, interval, 2)
    assert phi(4.0) == pytest.approx(8.0)
    assert phi(1.0) == pytest.approx(1.0)

    lo, hi = image_interval(interval, -1)
    psi = power_pullback(f, interval, -1)
    assert psi(lo) == pytest.approx(8.0)
    assert psi(hi) == pytest.approx(1.0)

    with pytest.raises(ReflectionDomainError):
        phi(9.0)


def test_repr(interval):
    P = p_sym_transform(parse('x'), interval, 2)
    assert repr(P).startswith('<PTransform> P(')
    assert repr(p_antisym_transform(parse('x'), interval, 2)).startswith(
        '<PTransform> AP(')
