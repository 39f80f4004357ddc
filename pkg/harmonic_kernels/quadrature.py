"""
Double-exponential quadrature on [lower, inf).

The integrand f is evaluated only on the open interval (lower, inf); its
singular exponent alpha > -1 describes the endpoint behaviour
f(y) ~ (y - lower)^alpha. The range is split at lower + delta,
delta = max(1, |lower|):

  * [lower, lower + delta] uses tanh-sinh. Nodes are generated as offsets
    u = y - lower in log form. f is sampled at the float y nearest to
    lower + u (never below the first float above lower) and rescaled by
    (u / (y - lower))^alpha, so rounding of y and nodes inside the first
    ulp do not bias the sum.
  * [lower + delta, inf) uses exp-sinh, y = lower + delta + exp(pi/2 sinh t).

The step h is halved until two successive levels agree to the requested
relative tolerance. Each halving only evaluates the new odd nodes.
"""
from __future__ import absolute_import, division

import cmath
import logging
import math
import sys
from collections import namedtuple

from .closedform import odd_resolvent_kernel
from .common import TOLERANCE_FLOOR
from .errors import DomainError
from .errors import NonConvergence
from .objects.space import SpaceDescriptor
from .objects.space import SpectralParam
from .specfun import gamma

logger = logging.getLogger(__name__)

_HALF_PI = math.pi / 2
_EPSILON = sys.float_info.epsilon

T_MAX = 6.5
MIN_LEVELS = 3
MAX_LEVELS = 12
NEGLIGIBLE = 1e-18
QUIET_NODES = 3

# Beyond this t the substituted transform integrand is below any tolerance.
TRANSFORM_T_MAX = 60.0


class Integrand(namedtuple('Integrand', ['evaluator', 'lower_endpoint', 'singular_exponent'])):

    __slots__ = ()

    @staticmethod
    def build(evaluator, lower_endpoint, singular_exponent=0.0):
        alpha = complex(singular_exponent)
        alpha = alpha.real if alpha.imag == 0 else alpha
        integrand = Integrand(evaluator, float(lower_endpoint), alpha)
        integrand.validate()
        return integrand

    def validate(self):
        # a complex exponent only adds a bounded phase (y - lower)^{i Im alpha}
        if not complex(self.singular_exponent).real > -1:
            raise DomainError('singular exponent {} is not integrable'.format(self.singular_exponent))
        if not math.isfinite(self.lower_endpoint):
            raise DomainError('lower endpoint must be finite')


class QuadratureResult(namedtuple('QuadratureResult',
                                  ['value', 'error_estimate', 'evaluations', 'converged'])):
    """`error_estimate` is relative to |value|; converged means it is within tol."""

    __slots__ = ()

    @property
    def absolute_error(self):
        return self.error_estimate * abs(self.value)


class _Piece(object):
    """One half-line of t with its running trapezoid sum."""

    def __init__(self, node):
        self.node = node
        self.total = 0j
        self.magnitude = 0.0
        self.evaluations = 0

    def add(self, t):
        contribution = self.node(t)
        self.evaluations += 1
        if contribution is None:
            return None
        self.total += contribution
        self.magnitude += abs(contribution)
        return contribution

    def sweep(self, start, step):
        """Add nodes start, start + step, ... while they matter."""
        quiet = 0
        t = start
        while abs(t) <= T_MAX:
            contribution = self.add(t)
            if contribution is None:
                break
            if abs(contribution) <= NEGLIGIBLE * abs(self.total):
                quiet += 1
                if quiet >= QUIET_NODES:
                    break
            else:
                quiet = 0
            t += step


def _finite(z):
    return math.isfinite(z.real) and math.isfinite(z.imag)


def _sample(f, y):
    """f(y) as a complex, or None where it overflows."""
    try:
        return complex(f(y))
    except OverflowError as err:
        logger.debug('integrand overflowed at y=%r: %s', y, err)
        return None


def _finite_node(integrand, delta):
    f = integrand.evaluator
    lower = integrand.lower_endpoint
    alpha = integrand.singular_exponent
    log_delta = math.log(delta)
    first_above = math.nextafter(lower, math.inf)

    def node(t):
        s = _HALF_PI * math.sinh(t)
        q = math.exp(-2 * abs(s))
        # u = delta / (1 + exp(-2 s)) and du/dt, both in log form
        if s < 0:
            log_u = log_delta + 2 * s - math.log1p(q)
        else:
            log_u = log_delta - math.log1p(q)
        log_weight = (log_delta + math.log(_HALF_PI * math.cosh(t)) +
                      math.log(2.0) - 2 * abs(s) - 2 * math.log1p(q))
        if (alpha * log_u + log_weight).real < -745:
            return 0j
        y = max(lower + math.exp(log_u), first_above)
        value = _sample(f, y)
        if value is None:
            return None
        if value == 0:
            return 0j
        # y - lower carries at most one rounding
        contribution = value * cmath.exp(alpha * (log_u - math.log(y - lower)) + log_weight)
        return contribution if _finite(contribution) else None

    return node


def _tail_node(integrand, delta):
    f = integrand.evaluator
    lower = integrand.lower_endpoint

    def node(t):
        s = _HALF_PI * math.sinh(t)
        if s > 700:
            return None
        e = math.exp(s)
        value = _sample(f, lower + delta + e)
        if value is None:
            return None
        if value == 0:
            return 0j
        contribution = value * (_HALF_PI * math.cosh(t) * e)
        return contribution if _finite(contribution) else None

    return node


def _level_sum(pieces, h, odd_only):
    for piece in pieces:
        if odd_only:
            piece.sweep(h, 2 * h)
            piece.sweep(-h, -2 * h)
        else:
            piece.add(0.0)
            piece.sweep(h, h)
            piece.sweep(-h, -h)


def integrate_semi_infinite(integrand, tol, levels=None):
    """Integrate f over [lower, inf) to relative tolerance `tol`.

    With `levels` given, exactly that many halvings are performed and the
    result is returned whether or not it converged; otherwise halving stops
    at convergence and NonConvergence is raised after MAX_LEVELS.
    """
    integrand = Integrand.build(*integrand)
    if not tol >= TOLERANCE_FLOOR:
        raise DomainError('tolerance {} is below {}'.format(tol, TOLERANCE_FLOOR))

    delta = max(1.0, abs(integrand.lower_endpoint))
    pieces = [_Piece(_finite_node(integrand, delta)), _Piece(_tail_node(integrand, delta))]

    h = 1.0
    _level_sum(pieces, h, odd_only=False)
    previous = h * sum(p.total for p in pieces)
    max_levels = MAX_LEVELS if levels is None else levels

    result = None
    for level in range(1, max_levels + 1):
        h /= 2
        _level_sum(pieces, h, odd_only=True)
        value = h * sum(p.total for p in pieces)
        roundoff = 8 * _EPSILON * h * sum(p.magnitude for p in pieces)
        error = max(abs(value - previous), roundoff)
        if value != 0:
            error /= abs(value)
        converged = error <= tol
        evaluations = sum(p.evaluations for p in pieces)
        result = QuadratureResult(value, error, evaluations, converged)
        logger.debug('level %d: h=%g value=%s error=%g evaluations=%d',
                     level, h, value, error, evaluations)
        if levels is None and level >= MIN_LEVELS and converged:
            return result
        previous = value

    if levels is not None:
        return result
    raise NonConvergence('quadrature did not reach tolerance {} in {} levels (error {})'.format(
                            tol, max_levels, result.error_estimate), result)


def _rho(r, t):
    # cosh rho = cosh r cosh t
    return math.acosh(math.cosh(r) * math.cosh(t))


def transform_integrand(space, lam, r, power=None, kernel=None):
    """Integrand of the substituted transform integral.

    After cosh rho = cosh r cosh t the transform becomes
    int_0^inf sinh^power(t) R_Y(lam, rho(t)) dt with power = dim_z - 1,
    which behaves like t^power at t = 0.
    """
    space = SpaceDescriptor.from_dims(*space)
    if power is None:
        power = space.dim_z - 1
    if kernel is None:
        kernel = odd_resolvent_kernel(space.odd_order, lam)

    def evaluator(t):
        if t > TRANSFORM_T_MAX:
            return 0j
        return math.sinh(t) ** power * kernel(_rho(r, t))

    return evaluator


def transform_prefactor(power):
    """2 pi^{(power+1)/2} / Gamma((power+1)/2)."""
    k = power + 1
    return 2 * math.pi ** (k / 2) / gamma(k / 2).real


def integrate_transform(space, lam, r, tol):
    """int_r^inf W_X(r, rho) R_Y(lam, rho) sinh rho drho with Y = H^{2 sigma + 1}."""
    space = SpaceDescriptor.from_dims(*space)
    if not space.transform_eligible:
        raise DomainError('{} is not transform-eligible'.format(space))
    if not r > 0:
        raise DomainError('r must be positive, got {}'.format(r))
    lam = SpectralParam.from_value(lam).value
    power = space.dim_z - 1
    result = integrate_semi_infinite(
        Integrand.build(transform_integrand(space, lam, r, power), 0.0, power), tol)
    return result._replace(value=transform_prefactor(power) * result.value)


def integrate_bundle_transform(space, tau, lam, r, tol):
    """The transform with sinh^tau(t) in place of sinh^{dim_z - 1}(t)."""
    space = SpaceDescriptor.from_dims(*space)
    if (space.dim_n + space.dim_z) % 2:
        raise DomainError('{} has no odd hyperbolic partner'.format(space))
    if not r > 0:
        raise DomainError('r must be positive, got {}'.format(r))
    lam = SpectralParam.from_value(lam).value
    kernel = odd_resolvent_kernel((space.dim_n + space.dim_z) // 2, lam)
    result = integrate_semi_infinite(
        Integrand.build(transform_integrand(space, lam, r, tau, kernel), 0.0, tau), tol)
    return result._replace(value=transform_prefactor(tau) * result.value)
