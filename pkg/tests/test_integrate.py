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
import pytest
from scipy import integrate as scipy_integrate
from scipy import special

from symmconv.expr import parse
from symmconv.integrate import (Integrator, QuadratureDomainError,
                                QuadratureError, cumulative_integrals,
                                frac_integral_left, frac_integral_right,
                                gamma, gauss_legendre, integrate_adaptive,
                                p_weighted_integral)
from symmconv.models import Interval, QuadConfig

GAMMA_3_2 = 0.886226925452758      # Gamma(1.5)
GAMMA_5_2 = 1.329340388179137      # Gamma(2.5)


def test_integrate_polynomials():
    assert integrate_adaptive(lambda x: x * x, 0, 1) == \
        pytest.approx(1 / 3, abs=1e-12)
    assert integrate_adaptive(lambda x: x ** 3, 1, 3) == \
        pytest.approx(20.0, abs=1e-10)
    assert integrate_adaptive(lambda x: np.ones_like(x), 2, 5) == \
        pytest.approx(3.0, abs=1e-12)


def test_integrate_reversed_and_empty():
    forward = integrate_adaptive(np.exp, 0, 1)
    backward = integrate_adaptive(np.exp, 1, 0)
    assert backward == -forward
    assert integrate_adaptive(np.exp, 1, 1) == 0.0


@pytest.mark.parametrize('source,lo,hi', [
    ('1/x', 1, math.e),
    ('exp(-x^2)', -2, 3),
    ('sin(10*x)', 0, 3),
    ('sqrt(x)', 0, 1),
    ('ln(x)', 0.5, 4),
    ('abs(x - 1.3)', 0, 2)
])
def test_integrate_against_scipy(source, lo, hi):
    f = parse(source)
    expected, _ = scipy_integrate.quad(f, lo, hi, epsabs=1e-13,
                                       epsrel=1e-13, limit=200)
    assert integrate_adaptive(f, lo, hi) == pytest.approx(expected,
                                                          abs=1e-9)


def test_full_output():
    value, info = integrate_adaptive(np.cos, 0, 1, full_output=True)
    assert value == pytest.approx(math.sin(1), abs=1e-12)
    assert info.converged
    assert info.abserr <= 1e-10
    assert info.evaluations >= 15


def test_non_convergence():
    cfg = QuadConfig(abs_tol=1e-15, rel_tol=1e-15, max_subdivisions=1)
    value, info = integrate_adaptive(np.sqrt, 0, 1, cfg, full_output=True)
    assert not info.converged
    assert info.subdivisions <= 1
    assert value == pytest.approx(2 / 3, abs=1e-3)


def test_non_finite_integrand():
    def spike(x):
        return np.where(x == 0.5, np.inf, 1.0)

    with pytest.raises(QuadratureDomainError):
        integrate_adaptive(spike, 0, 1)

    with pytest.raises(QuadratureDomainError):
        integrate_adaptive(np.exp, 0, math.inf)


def test_cumulative_integrals():
    points = np.array([1.0, 1.5, 2.0, 3.0])
    primitives = cumulative_integrals(lambda x: np.ones_like(x), 1.0, points)
    np.testing.assert_allclose(primitives, points - 1.0, atol=1e-13)

    primitives = cumulative_integrals(lambda x: 2 * x, 0.0, [1.0, 2.0])
    np.testing.assert_allclose(primitives, [1.0, 4.0], atol=1e-12)

    with pytest.raises(QuadratureDomainError):
        cumulative_integrals(np.exp, 1.0, [2.0, 1.5])
    with pytest.raises(QuadratureDomainError):
        cumulative_integrals(np.exp, 1.0, [0.5])


def test_gauss_legendre():
    nodes, weights = gauss_legendre(8, 1.0, 3.0)
    assert weights.sum() == pytest.approx(1.0, abs=1e-14)
    assert np.all(np.diff(nodes) > 0)
    np.testing.assert_allclose(nodes + nodes[::-1], 4.0, atol=1e-13)
    # normalised rule: mean of x^3 over [1, 3] is 20 / 2
    assert float(weights @ nodes ** 3) == pytest.approx(10.0, abs=1e-12)

    with pytest.raises(QuadratureError):
        gauss_legendre(0, 0, 1)


def test_p_weighted_integral():
    interval = Interval(a=1, b=3)
    assert p_weighted_integral(parse('1'), interval, 2) == \
        pytest.approx(1.0, abs=1e-12)
    assert p_weighted_integral(parse('x^2'), interval, 2) == \
        pytest.approx(5.0, abs=1e-12)
    assert p_weighted_integral(parse('x^2'), interval, 1) == \
        pytest.approx(13 / 3, abs=1e-12)

    value, info = p_weighted_integral(parse('x^2'), interval, -1,
                                      full_output=True)
    # -1 / (1/3 - 1) * int_1^3 dx = 3
    assert value == pytest.approx(3.0, abs=1e-12)
    assert info.converged


def test_fractional_constants():
    one = parse('1')
    identity = parse('x')

    assert frac_integral_left(one, 0, 1, 0.5) == \
        pytest.approx(1 / GAMMA_3_2, abs=1e-8)
    assert frac_integral_left(identity, 0, 1, 0.5) == \
        pytest.approx(1 / GAMMA_5_2, abs=1e-8)
    assert frac_integral_left(identity, 0, 1, 1) == \
        pytest.approx(0.5, abs=1e-12)

    assert frac_integral_right(one, 1, 0, 0.5) == \
        pytest.approx(1 / GAMMA_3_2, abs=1e-8)
    assert frac_integral_right(identity, 1, 0, 1) == \
        pytest.approx(0.5, abs=1e-12)
    assert frac_integral_left(one, 2, 2, 0.5) == 0.0


@pytest.mark.parametrize('alpha', [0.3, 0.5, 1.0, 1.5, 2.0])
def test_fractional_power_rule(alpha):
    # J^alpha 1 = (x - base)^alpha / Gamma(alpha + 1)
    one = parse('1')
    expected = 1.5 ** alpha / special.gamma(alpha + 1)
    assert frac_integral_left(one, 1.0, 2.5, alpha) == \
        pytest.approx(expected, rel=1e-9)
    assert frac_integral_right(one, 2.5, 1.0, alpha) == \
        pytest.approx(expected, rel=1e-9)


@pytest.mark.parametrize('source,base,at', [
    ('x', 0, 1),
    ('x^2', 1, 3),
    ('exp(x)', -1, 2),
    ('sin(x)', 0, 3),
    ('1/x', 1, 5),
    ('ln(x)', 1, 4),
    ('sqrt(x)', 0, 2),
    ('x^3 - 2*x', -2, 2),
    ('cos(3*x)', 0.5, 2.5),
    ('abs(x - 1)', 0, 2)
])
def test_fractional_order_one(source, base, at):
    h = parse(source)
    plain = integrate_adaptive(h, base, at)
    assert frac_integral_left(h, base, at, 1.0) == \
        pytest.approx(plain, abs=1e-9)
    assert frac_integral_right(h, at, base, 1.0) == \
        pytest.approx(plain, abs=1e-9)


@pytest.mark.parametrize('alpha', [0.4, 0.7, 1.3, 2.5])
def test_fractional_reflection(alpha):
    h = parse('x^2 + sin(x)')
    right = frac_integral_right(h, 2.0, 0.5, alpha)
    left = frac_integral_left(lambda s: h(2.5 - s), 0.5, 2.0, alpha)
    assert right == pytest.approx(left, abs=1e-9)


@pytest.mark.parametrize('alpha,beta', [(0.5, 0.5), (0.3, 1.2), (1.5, 0.7)])
def test_fractional_semigroup(alpha, beta):
    base, at = 1.0, 2.0

    def inner(t):
        return np.power(t - base, beta) / special.gamma(beta + 1)

    composed = frac_integral_left(inner, base, at, alpha)
    direct = frac_integral_left(parse('1'), base, at, alpha + beta)
    assert composed == pytest.approx(direct, rel=1e-7)


def test_fractional_linearity():
    f, g = parse('exp(x)'), parse('x^2')
    combined = frac_integral_left(lambda x: 2 * f(x) - 3 * g(x), 0, 1, 0.6)
    separate = (2 * frac_integral_left(f, 0, 1, 0.6) -
                3 * frac_integral_left(g, 0, 1, 0.6))
    assert combined == pytest.approx(separate, abs=1e-10)


def test_fractional_wrong_side():
    with pytest.raises(QuadratureDomainError):
        frac_integral_left(parse('1'), 2, 1, 0.5)
    with pytest.raises(QuadratureDomainError):
        frac_integral_right(parse('1'), 1, 2, 0.5)


def test_gamma_integers():
    for n in range(1, 11):
        assert gamma(n) == math.factorial(n - 1)


def test_gamma_half():
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert gamma(1.5) == pytest.approx(GAMMA_3_2, rel=1e-13)


def test_gamma_against_scipy():
    for x in (0.01, 0.1, 0.37, 0.5, 1.7, 3.2, 7.25, 30.5, 150.3):
        assert gamma(x) == pytest.approx(special.gamma(x), rel=1e-12)


def test_gamma_recurrence():
    rng = np.random.default_rng(2026)
    for x in rng.uniform(0.1, 10.0, 20):
        assert gamma(x + 1) == pytest.approx(x * gamma(x), rel=1e-12)


def test_gamma_domain():
    for bad in (0.0, -1.0, -0.5, math.inf, math.nan):
        with pytest.raises(QuadratureDomainError):
            gamma(bad)
    with pytest.raises(QuadratureDomainError):
        gamma(200.0)


def test_integrator_records_failures():
    integrator = Integrator(QuadConfig(abs_tol=1e-15, rel_tol=1e-15,
                                       max_subdivisions=1))
    integrator(np.sqrt, 0, 1, 'root')
    assert not integrator.converged
    assert integrator.failures[0].startswith('root did not converge')

    integrator = Integrator()
    assert integrator.weighted(parse('x^2'), Interval(a=1, b=3), 1) == \
        pytest.approx(13 / 3)
    assert integrator.left(parse('1'), 0, 1, 0.5) == \
        pytest.approx(1 / GAMMA_3_2, abs=1e-8)
    assert integrator.right(parse('1'), 1, 0, 0.5) == \
        pytest.approx(1 / GAMMA_3_2, abs=1e-8)
    np.testing.assert_allclose(
        integrator.cumulative(lambda x: np.ones_like(x), 0, [1.0, 2.0]),
        [1.0, 2.0])
    assert integrator.converged
