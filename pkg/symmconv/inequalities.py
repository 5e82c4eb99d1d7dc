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

"""Evaluation of Hermite-Hadamard type chains as numbers and margins

Every operation returns an `InequalityReport` whose terms follow the
left-to-right order of the chain. A link holds when right - left is at
least -chain_tol. Intermediate integrals are kept in
`InequalityReport.integrals` for audit.
"""

import logging
from typing import Callable, Dict, Sequence, Tuple, Union

import numpy as np

from symmconv.analysis import (check_p_symmetric_weight,
                               check_symmetrized_p_convex)
from symmconv.integrate import Integrator, gamma, gauss_legendre
from symmconv.meanspace import (image_interval, p_midpoint, p_reflect,
                                p_sym_transform, power_mean, power_pullback)
from symmconv.models import (FracOrder, GridSpec, InequalityReport,
                             Interval, PParam, QuadConfig)

LOGGER = logging.getLogger(__name__)

Real = Union[float, np.ndarray]
Function = Callable[[Real], Real]

#: default tolerance of one link of a chain
CHAIN_TOL = 1e-7

#: |y^p - x^p| below this makes a subinterval chain degenerate
DEGENERATE_SPAN = 1e-12

#: |a^p + b^p - 2x^p| below this puts x on the p-midpoint
MIDPOINT_GAP = 1e-8

#: half-width, in power coordinates, of the band where the reflected
#: pair mean is replaced by its continuous extension f(p-midpoint)
MIDPOINT_BAND = 1e-4

#: tensor rule size of the double refinement
DOUBLE_NODES = 64

#: |v - u| below this is treated as the diagonal of the tensor rule
DIAGONAL_BAND = 1e-6


class _Chain:
    """call-local context shared by the terms of one report"""

    def __init__(self, f: Function, interval: Interval,
                 p: Union[PParam, float], cfg: QuadConfig = None,
                 chain_tol: float = CHAIN_TOL):
        self.f = f
        self.interval = Interval.coerce(interval)
        self.p = float(PParam.coerce(p))
        self.integrate = Integrator(cfg)
        self.chain_tol = chain_tol

        self.a, self.b = self.interval.a, self.interval.b
        self.A = float(np.power(self.a, self.p))
        self.B = float(np.power(self.b, self.p))
        self.S = self.A + self.B
        self.lo, self.hi = image_interval(self.interval, self.p)
        self.mid = p_midpoint(self.interval, self.p)

    def value(self, x: float) -> float:
        return float(self.f(x))

    def reflect(self, x: Real) -> Real:
        return p_reflect(x, self.interval, self.p)

    def endpoint_mean(self) -> float:
        return 0.5 * (self.value(self.a) + self.value(self.b))

    def weighted(self, g: Function, lo: float, hi: float,
                 label: str) -> float:
        """integral of g(t) t^(p-1) over [lo, hi]"""

        p = self.p

        def integrand(t):
            return np.asarray(g(t), dtype=float) * np.power(t, p - 1.0)

        return self.integrate(integrand, lo, hi, label)

    def pullback(self, g: Function = None) -> Function:
        return power_pullback(g or self.f, self.interval, self.p)

    def metadata(self, **extra) -> Dict:
        values = {'a': self.a, 'b': self.b, 'p': self.p,
                  'p_midpoint': self.mid}
        values.update(extra)
        return values

    def report(self, name: str, terms: Sequence[Tuple[str, float]],
               integrals: Dict[str, float] = None, metadata: Dict = None,
               warnings: Sequence[str] = (),
               hypothesis_verified: bool = None) -> InequalityReport:
        warnings = list(warnings) + list(self.integrate.failures)
        report = InequalityReport.from_terms(
            name, terms, self.chain_tol, integrals=integrals or {},
            metadata=metadata or self.metadata(), warnings=warnings,
            converged=self.integrate.converged,
            hypothesis_verified=hypothesis_verified)
        LOGGER.debug(f'{name}: {report.values()} holds={report.holds}')
        return report


def _weight_mass(chain: _Chain, w: Function, grid: GridSpec) -> float:
    xs = np.linspace(chain.a, chain.b, grid.xy_points * grid.t_points)
    values = np.asarray(w(xs), dtype=float)
    if np.any(values < 0):
        bad = float(xs[values < 0][0])
        raise WeightError(f'weight is negative at x={bad!r}')

    mass = chain.weighted(w, chain.a, chain.b, 'weight mass')
    if not mass > 0:
        raise WeightError('weight has no positive mass on the interval')
    return mass


def hh_p_convex(f: Function, interval: Interval, p: Union[PParam, float],
                cfg: QuadConfig = None,
                chain_tol: float = CHAIN_TOL) -> InequalityReport:
    """
    Hermite-Hadamard chain for p-convex functions

    f(p-midpoint) <= p / (b^p - a^p) * int_a^b f(x) x^(p-1) dx
    <= (f(a) + f(b)) / 2

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param cfg: `QuadConfig`
    :param chain_tol: link tolerance

    :returns: `InequalityReport`
    """

    chain = _Chain(f, interval, p, cfg, chain_tol)
    return _hh(chain, 'hh')


def _hh(chain: _Chain, name: str, **kwargs) -> InequalityReport:
    raw = chain.weighted(chain.f, chain.a, chain.b, 'weighted integral')
    mean = chain.p / (chain.B - chain.A) * raw
    return chain.report(name, [
        ('f(p-midpoint)', chain.value(chain.mid)),
        ('weighted mean', mean),
        ('endpoint mean', chain.endpoint_mean())
    ], integrals={'weighted_integral': raw}, **kwargs)


def hh_symmetrized(f: Function, interval: Interval, p: Union[PParam, float],
                   cfg: QuadConfig = None, chain_tol: float = CHAIN_TOL,
                   verify: bool = False,
                   grid: GridSpec = None) -> InequalityReport:
    """
    Hermite-Hadamard chain for symmetrized p-convex functions

    Same numbers as `hh_p_convex`; with verify the report records whether
    f passed `check_symmetrized_p_convex`.

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param cfg: `QuadConfig`
    :param chain_tol: link tolerance
    :param verify: run the symmetrized p-convexity decider
    :param grid: `GridSpec` of the decider

    :returns: `InequalityReport`
    """

    chain = _Chain(f, interval, p, cfg, chain_tol)
    verified = None
    if verify:
        verified = check_symmetrized_p_convex(f, chain.interval, chain.p,
                                              grid).holds
    return _hh(chain, 'symmetrized', hypothesis_verified=verified)


def hh_harmonic(f: Function, interval: Interval, cfg: QuadConfig = None,
                chain_tol: float = CHAIN_TOL) -> InequalityReport:
    """
    Hermite-Hadamard chain for harmonically convex functions

    f(2ab / (a + b)) <= ab / (b - a) * int_a^b f(x) / x^2 dx
    <= (f(a) + f(b)) / 2
    """

    chain = _Chain(f, interval, -1.0, cfg, chain_tol)
    a, b = chain.a, chain.b

    def integrand(x):
        return np.asarray(f(x), dtype=float) / (x * x)

    raw = chain.integrate(integrand, a, b, 'harmonic integral')
    return chain.report('harmonic', [
        ('f(harmonic mean)', chain.value(2 * a * b / (a + b))),
        ('harmonic integral mean', a * b / (b - a) * raw),
        ('endpoint mean', chain.endpoint_mean())
    ], integrals={'harmonic_integral': raw},
        metadata={'a': a, 'b': b, 'harmonic_mean': 2 * a * b / (a + b)})


def transform_bounds(f: Function, interval: Interval,
                     p: Union[PParam, float], x: float,
                     chain_tol: float = CHAIN_TOL) -> InequalityReport:
    """
    Pointwise bounds f(p-midpoint) <= P(x) <= (f(a) + f(b)) / 2 of the
    p-symmetrical transform

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param x: point of [a, b]
    :param chain_tol: link tolerance

    :returns: `InequalityReport`
    """

    chain = _Chain(f, interval, p, chain_tol=chain_tol)
    reflected = chain.reflect(x)
    transform = p_sym_transform(f, chain.interval, chain.p)
    return chain.report('bounds', [
        ('f(p-midpoint)', chain.value(chain.mid)),
        ('P(x)', float(transform(x))),
        ('endpoint mean', chain.endpoint_mean())
    ], metadata=chain.metadata(x=float(x), reflected=reflected))


def transform_extrema(f: Function, interval: Interval,
                      p: Union[PParam, float],
                      grid: GridSpec = None) -> Tuple[float, float]:
    """
    Grid infimum and supremum of the p-symmetrical transform

    The sample is uniform in power coordinates and contains both
    endpoints and the p-midpoint.

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param grid: `GridSpec`

    :returns: `tuple` (inf, sup)
    """

    interval = Interval.coerce(interval)
    p = float(PParam.coerce(p))
    grid = grid or GridSpec()

    n = grid.xy_points * grid.t_points
    if n % 2 == 0:
        n += 1
    lo, hi = image_interval(interval, p)
    u = np.linspace(lo, hi, n)
    xs = np.clip(np.power(u, 1.0 / p), interval.a, interval.b)
    xs[0], xs[-1] = (interval.a, interval.b) if p > 0 else (interval.b,
                                                            interval.a)
    xs[n // 2] = p_midpoint(interval, p)

    values = np.asarray(p_sym_transform(f, interval, p)(xs), dtype=float)
    return float(values.min()), float(values.max())


def transform_extrema_report(f: Function, interval: Interval,
                             p: Union[PParam, float], grid: GridSpec = None,
                             chain_tol: float = CHAIN_TOL
                             ) -> InequalityReport:
    """
    Chain f(p-midpoint) <= inf P <= sup P <= (f(a) + f(b)) / 2 built on
    `transform_extrema`
    """

    chain = _Chain(f, interval, p, chain_tol=chain_tol)
    inf, sup = transform_extrema(f, chain.interval, chain.p, grid)
    return chain.report('extrema', [
        ('f(p-midpoint)', chain.value(chain.mid)),
        ('inf P', inf),
        ('sup P', sup),
        ('endpoint mean', chain.endpoint_mean())
    ])


def fejer_weighted(f: Function, w: Function, interval: Interval,
                   p: Union[PParam, float], cfg: QuadConfig = None,
                   grid: GridSpec = None,
                   chain_tol: float = CHAIN_TOL) -> InequalityReport:
    """
    Weighted (Fejer) chain, terms normalised by the weight mass
    W = int_a^b w(x) x^(p-1) dx

    The middle integrand is w f when w is p-symmetric and w P otherwise.

    :param f: vectorised callable on [a, b]
    :param w: non-negative vectorised weight on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param cfg: `QuadConfig`
    :param grid: `GridSpec` for the weight checks
    :param chain_tol: link tolerance

    :returns: `InequalityReport`
    """

    chain = _Chain(f, interval, p, cfg, chain_tol)
    grid = grid or GridSpec()
    mass = _weight_mass(chain, w, grid)

    symmetry = check_p_symmetric_weight(w, chain.interval, chain.p, grid)
    if symmetry.holds:
        inner = f
        middle_label = 'weighted mean of f'
    else:
        inner = p_sym_transform(f, chain.interval, chain.p)
        middle_label = 'weighted mean of P'

    def product(x):
        return (np.asarray(inner(x), dtype=float) *
                np.asarray(w(x), dtype=float))

    middle = chain.weighted(product, chain.a, chain.b, 'weighted middle')
    lower = chain.value(chain.mid)
    upper = chain.endpoint_mean()

    return chain.report('fejer', [
        ('f(p-midpoint)', lower),
        (middle_label, middle / mass),
        ('endpoint mean', upper)
    ], integrals={
        'weight_mass': mass,
        'lower_raw': lower * mass,
        'middle_raw': middle,
        'upper_raw': upper * mass
    }, metadata=chain.metadata(
        weight_symmetric=symmetry.holds,
        worst_asymmetry=symmetry.worst_asymmetry,
        middle_integrand='w*f' if symmetry.holds else 'w*P'
    ), hypothesis_verified=symmetry.holds)


def _subinterval(chain: _Chain, name: str, x: float, y: float,
                 mean: Callable[[float, float], float],
                 reflect: Function, factor: float,
                 integral: Callable[[float, float, str], float]
                 ) -> InequalityReport:
    m = mean(x, y)
    rx, ry, rm = reflect(x), reflect(y), reflect(m)
    inner = (integral(x, y, 'integral over [x, y]') +
             integral(ry, rx, 'integral over the reflected interval'))
    return chain.report(name, [
        ('midpoint pair mean', 0.5 * (chain.value(m) + chain.value(rm))),
        ('integral mean', factor * inner),
        ('four-point mean', 0.25 * (chain.value(x) + chain.value(y) +
                                    chain.value(rx) + chain.value(ry)))
    ], integrals={'inner_integrals': inner},
        metadata=chain.metadata(x=float(x), y=float(y), mean=float(m)))


def hh_subinterval_chain(f: Function, interval: Interval,
                         p: Union[PParam, float], x: float, y: float,
                         cfg: QuadConfig = None,
                         chain_tol: float = CHAIN_TOL) -> InequalityReport:
    """
    Three-part chain over [x, y] and its p-reflection

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param x: point of [a, b]
    :param y: point of [a, b], y^p != x^p
    :param cfg: `QuadConfig`
    :param chain_tol: link tolerance

    :returns: `InequalityReport`
    """

    chain = _Chain(f, interval, p, cfg, chain_tol)
    chain.reflect(np.array([x, y], dtype=float))
    span = float(np.power(y, chain.p) - np.power(x, chain.p))
    if abs(span) < DEGENERATE_SPAN:
        raise DegenerateChainError(f'|y^p - x^p| = {abs(span)!r} is below '
                                   f'{DEGENERATE_SPAN}')

    def integral(lo, hi, label):
        return chain.weighted(f, lo, hi, label)

    return _subinterval(chain, 'chain', x, y,
                        lambda u, v: power_mean(u, v, 0.5, chain.p),
                        chain.reflect, chain.p / (2 * span), integral)


def dragomir_chain(f: Function, interval: Interval, x: float, y: float,
                   cfg: QuadConfig = None,
                   chain_tol: float = CHAIN_TOL) -> InequalityReport:
    """subinterval chain for symmetrized convex functions, written with
    the arithmetic mean and the reflection a + b - x"""

    chain = _Chain(f, interval, 1.0, cfg, chain_tol)
    a, b = chain.a, chain.b
    for point in (x, y):
        if not a <= point <= b:
            raise InequalityError(f'{point!r} lies outside [{a!r}, {b!r}]')
    if abs(y - x) < DEGENERATE_SPAN:
        raise DegenerateChainError('x and y coincide')

    def integral(lo, hi, label):
        return chain.integrate(f, lo, hi, label)

    return _subinterval(chain, 'dragomir', x, y, lambda u, v: (u + v) / 2,
                        lambda u: a + b - u, 1 / (2 * (y - x)), integral)


def harmonic_chain(f: Function, interval: Interval, x: float, y: float,
                   cfg: QuadConfig = None,
                   chain_tol: float = CHAIN_TOL) -> InequalityReport:
    """subinterval chain for symmetrized harmonically convex functions,
    written with the harmonic mean and the reflection abx / ((a+b)x - ab)"""

    chain = _Chain(f, interval, -1.0, cfg, chain_tol)
    a, b = chain.a, chain.b
    for point in (x, y):
        if not a <= point <= b:
            raise InequalityError(f'{point!r} lies outside [{a!r}, {b!r}]')
    if abs(y - x) < DEGENERATE_SPAN:
        raise DegenerateChainError('x and y coincide')

    def reflect(z):
        return a * b * z / ((a + b) * z - a * b)

    def integral(lo, hi, label):
        return chain.integrate(
            lambda t: np.asarray(f(t), dtype=float) / (t * t), lo, hi, label)

    return _subinterval(chain, 'harmonic-chain', x, y,
                        lambda u, v: 2 * u * v / (u + v), reflect,
                        x * y / (2 * (y - x)), integral)


def reflected_pair_bound(f: Function, interval: Interval,
                         p: Union[PParam, float], x: float,
                         cfg: QuadConfig = None,
                         chain_tol: float = CHAIN_TOL) -> InequalityReport:
    """
    f(p-midpoint) <= p / (a^p + b^p - 2x^p) * int_x^r(x) f(t) t^(p-1) dt
    <= P(x), r the p-reflection

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param x: point of [a, b] away from the p-midpoint
    :param cfg: `QuadConfig`
    :param chain_tol: link tolerance

    :returns: `InequalityReport`
    """

    chain = _Chain(f, interval, p, cfg, chain_tol)
    reflected = chain.reflect(x)
    gap = chain.S - 2 * float(np.power(x, chain.p))
    if abs(gap) < MIDPOINT_GAP:
        raise DegenerateChainError(f'x={x!r} is too close to the '
                                   f'p-midpoint {chain.mid!r}')

    raw = chain.weighted(f, x, reflected, 'reflected pair integral')
    return chain.report('reflected', [
        ('f(p-midpoint)', chain.value(chain.mid)),
        ('reflected pair mean', chain.p / gap * raw),
        ('P(x)', 0.5 * (chain.value(x) + chain.value(reflected)))
    ], integrals={'reflected_pair_integral': raw},
        metadata=chain.metadata(x=float(x), reflected=reflected))


def refinement_integral(f: Function, interval: Interval,
                        p: Union[PParam, float], cfg: QuadConfig = None,
                        chain_tol: float = CHAIN_TOL) -> InequalityReport:
    """
    Refinement of the left Hermite-Hadamard inequality by averaging the
    reflected pair means over [a, b]

    Worked in power coordinates u = x^p, where the middle term is the mean
    over the image interval of m(u), the mean of f(v^(1/p)) over
    [u, S - u], S = a^p + b^p. m is symmetric about S / 2, so the outer
    integral runs over one half; within `MIDPOINT_BAND` of S / 2, m takes
    its continuous extension f(p-midpoint).

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param cfg: `QuadConfig`
    :param chain_tol: link tolerance

    :returns: `InequalityReport`
    """

    chain = _Chain(f, interval, p, cfg, chain_tol)
    phi = chain.pullback()
    centre = 0.5 * chain.S
    lower = chain.value(chain.mid)
    band = min(MIDPOINT_BAND, 0.25 * (chain.hi - chain.lo))

    def pair_mean(u):
        # mean of phi over [u, S - u] as a unit-interval average
        width = chain.S - 2.0 * u
        return chain.integrate(lambda s: phi(u + s * width), 0.0, 1.0,
                               'reflected pair mean')

    def outer(us):
        return np.array([pair_mean(u) for u in np.atleast_1d(us)])

    half = chain.integrate(outer, chain.lo, centre - band,
                           'refinement outer integral')
    middle = 2.0 * (half + band * lower) / (chain.hi - chain.lo)

    raw = chain.weighted(f, chain.a, chain.b, 'weighted integral')
    mean = chain.p / (chain.B - chain.A) * raw

    return chain.report('refinement', [
        ('f(p-midpoint)', lower),
        ('refined mean', middle),
        ('weighted mean', mean)
    ], integrals={'outer_half_integral': half, 'weighted_integral': raw},
        metadata=chain.metadata(midpoint_band=band))


def pconvex_double_refinement(f: Function, interval: Interval,
                              p: Union[PParam, float], cfg: QuadConfig = None,
                              chain_tol: float = CHAIN_TOL
                              ) -> InequalityReport:
    """
    Four-term refinement of the left Hermite-Hadamard inequality for
    p-convex functions, averaging over pairs (x, y) of [a, b]^2

    The pair averages use a tensor Gauss-Legendre rule in power
    coordinates with the normalised product measure. The inner integrals
    come from primitives of f(u^(1/p)) at the nodes; on the diagonal the
    bracket takes its limit [f(x) + f(r(x))] / 2.

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param cfg: `QuadConfig`
    :param chain_tol: link tolerance

    :returns: `InequalityReport`
    """

    chain = _Chain(f, interval, p, cfg, chain_tol)
    phi = chain.pullback()
    nodes, weights = gauss_legendre(DOUBLE_NODES, chain.lo, chain.hi)
    tensor = np.outer(weights, weights)

    mids = 0.5 * (nodes[:, None] + nodes[None, :])
    reflected_mids = np.clip(chain.S - mids, chain.lo, chain.hi)
    pair = 0.5 * (np.asarray(phi(mids), dtype=float) +
                  np.asarray(phi(reflected_mids), dtype=float))
    second = float(np.sum(tensor * pair))

    # nodes are symmetric, so S - u_i is the mirrored node u_(n-1-i)
    primitive = chain.integrate.cumulative(phi, chain.lo, nodes,
                                           'primitive at nodes')
    mirrored = primitive[::-1]
    values = np.asarray(phi(nodes), dtype=float)

    span = nodes[None, :] - nodes[:, None]
    diagonal = np.abs(span) < DIAGONAL_BAND
    direct = primitive[None, :] - primitive[:, None]
    reflected = mirrored[:, None] - mirrored[None, :]
    with np.errstate(divide='ignore', invalid='ignore'):
        bracket = (direct + reflected) / (2.0 * span)
    limit = 0.5 * (values + values[::-1])
    bracket = np.where(diagonal, limit[:, None] * np.ones_like(span),
                       bracket)
    third = float(np.sum(tensor * bracket))

    raw = chain.weighted(f, chain.a, chain.b, 'weighted integral')
    mean = chain.p / (chain.B - chain.A) * raw

    return chain.report('double', [
        ('f(p-midpoint)', chain.value(chain.mid)),
        ('midpoint pair mean', second),
        ('integral pair mean', third),
        ('weighted mean', mean)
    ], integrals={'weighted_integral': raw},
        metadata=chain.metadata(nodes=DOUBLE_NODES,
                                diagonal_pairs=int(diagonal.sum())))


def _fractional_sum(chain: _Chain, h: Function, alpha: float,
                    label: str) -> float:
    """J_{lo+}^alpha h(hi) + J_{hi-}^alpha h(lo) on the image interval"""

    lo, hi = chain.lo, chain.hi
    return (chain.integrate.left(h, lo, hi, alpha, f'{label} (left)') +
            chain.integrate.right(h, hi, lo, alpha, f'{label} (right)'))


def _placement(p: float) -> Dict[str, str]:
    if p > 0:
        return {'operator_case': 'p > 0',
                'placement': 'J_{a^p+}(b^p) + J_{b^p-}(a^p)'}
    return {'operator_case': 'p < 0',
            'placement': 'J_{b^p+}(a^p) + J_{a^p-}(b^p)'}


def fejer_fractional(f: Function, w: Function, interval: Interval,
                     p: Union[PParam, float],
                     alpha: Union[FracOrder, float], cfg: QuadConfig = None,
                     grid: GridSpec = None,
                     chain_tol: float = CHAIN_TOL) -> InequalityReport:
    """
    Fractional Fejer chain, terms normalised by the fractional weight
    mass K(w o g), K(h) = J_{lo+}^alpha h(hi) + J_{hi-}^alpha h(lo) on the
    ascending image interval [lo, hi] and g(u) = u^(1/p)

    For p > 0 this is the placement at a^p and b^p, for p < 0 the mirrored
    one; both are recorded in the report metadata.

    :param f: vectorised callable on [a, b]
    :param w: non-negative p-symmetric weight on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param alpha: fractional order
    :param cfg: `QuadConfig`
    :param grid: `GridSpec` for the weight checks
    :param chain_tol: link tolerance

    :returns: `InequalityReport`
    """

    chain = _Chain(f, interval, p, cfg, chain_tol)
    alpha = float(FracOrder.coerce(alpha))
    grid = grid or GridSpec()

    _weight_mass(chain, w, grid)
    symmetry = check_p_symmetric_weight(w, chain.interval, chain.p, grid)
    if not symmetry.holds:
        raise WeightError(f'weight is not p-symmetric (worst asymmetry '
                          f'{symmetry.worst_asymmetry!r} at '
                          f'x={symmetry.witness_x!r})')

    w_g = chain.pullback(w)
    f_g = chain.pullback()

    def product(u):
        return (np.asarray(f_g(u), dtype=float) *
                np.asarray(w_g(u), dtype=float))

    mass = _fractional_sum(chain, w_g, alpha, 'fractional weight mass')
    if not mass > 0:
        raise WeightError('weight has no positive fractional mass')
    middle = _fractional_sum(chain, product, alpha, 'fractional middle')
    lower = chain.value(chain.mid)
    upper = chain.endpoint_mean()

    return chain.report('fracfejer', [
        ('f(p-midpoint)', lower),
        ('fractional weighted mean of f', middle / mass),
        ('endpoint mean', upper)
    ], integrals={
        'fractional_weight_mass': mass,
        'lower_raw': lower * mass,
        'middle_raw': middle,
        'upper_raw': upper * mass
    }, metadata=chain.metadata(alpha=alpha, **_placement(chain.p)))


def fractional_weight_bounds(w: Function, interval: Interval,
                             p: Union[PParam, float],
                             alpha: Union[FracOrder, float],
                             cfg: QuadConfig = None,
                             grid: GridSpec = None,
                             chain_tol: float = CHAIN_TOL
                             ) -> InequalityReport:
    """
    Bounds of the fractional weight mass of any non-negative w

    2^(1-alpha) W <= Gamma(alpha) / (2|p| L^(alpha-1)) K(w o g) <= W / 2

    with W = int_a^b w(x) x^(p-1) dx and L = |b^p - a^p|. The chain comes
    from the Fejer chain of |x^p - a^p|^(alpha-1), which is symmetrized
    p-convex for alpha >= 2.

    :param w: non-negative vectorised weight on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param alpha: fractional order
    :param cfg: `QuadConfig`
    :param grid: `GridSpec` for the weight check
    :param chain_tol: link tolerance

    :returns: `InequalityReport`
    """

    chain = _Chain(w, interval, p, cfg, chain_tol)
    alpha = float(FracOrder.coerce(alpha))
    length = chain.hi - chain.lo

    mass = _weight_mass(chain, w, grid or GridSpec())
    fractional = _fractional_sum(chain, chain.pullback(w), alpha,
                                 'fractional weight mass')
    scale = gamma(alpha) / (2 * abs(chain.p) * length ** (alpha - 1))

    warnings = []
    if alpha < 2:
        warnings.append(f'alpha={alpha!r} is below 2: |x^p - a^p|^(alpha-1) '
                        f'is not symmetrized p-convex, the chain may fail')

    return chain.report('fracweight', [
        ('2^(1-alpha) W', 2 ** (1 - alpha) * mass),
        ('scaled fractional mass', scale * fractional),
        ('W / 2', 0.5 * mass)
    ], integrals={'weight_mass': mass, 'fractional_weight_mass': fractional},
        metadata=chain.metadata(alpha=alpha, **_placement(chain.p)),
        warnings=warnings, hypothesis_verified=alpha >= 2)


def fractional_hh(f: Function, interval: Interval, p: Union[PParam, float],
                  alpha: Union[FracOrder, float], cfg: QuadConfig = None,
                  chain_tol: float = CHAIN_TOL) -> InequalityReport:
    """
    Fractional Hermite-Hadamard chain

    f(p-midpoint) <= Gamma(alpha + 1) / (2 L^alpha) K(f o g)
    <= (f(a) + f(b)) / 2, L = |b^p - a^p|

    :param f: vectorised callable on [a, b]
    :param interval: `Interval`
    :param p: exponent
    :param alpha: fractional order
    :param cfg: `QuadConfig`
    :param chain_tol: link tolerance

    :returns: `InequalityReport`
    """

    chain = _Chain(f, interval, p, cfg, chain_tol)
    alpha = float(FracOrder.coerce(alpha))
    length = chain.hi - chain.lo

    fractional = _fractional_sum(chain, chain.pullback(), alpha,
                                 'fractional integral')
    scale = gamma(alpha + 1) / (2 * length ** alpha)

    return chain.report('frachh', [
        ('f(p-midpoint)', chain.value(chain.mid)),
        ('fractional mean', scale * fractional),
        ('endpoint mean', chain.endpoint_mean())
    ], integrals={'fractional_integral': fractional},
        metadata=chain.metadata(alpha=alpha, **_placement(chain.p)))


class InequalityError(Exception):
    """inequality generic error"""
    pass


class DegenerateChainError(InequalityError):
    """chain undefined at the requested points"""
    pass


class WeightError(InequalityError):
    """weight violates a hypothesis of a weighted chain"""
    pass
