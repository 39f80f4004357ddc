"""
Radial kernels on real hyperbolic spaces H^n and harmonic NA spaces X.

Every resolvent here has the shape

    C(lam) * cosh(r)^{-s0 + i lam} * 2F1(a, b; 1 - i lam; sech^2 r)

and goes through `_resolvent`; only the constants and parameter shifts
differ. Radii below `r_min` put sech^2 r past the certified 2F1 domain
and raise DomainError.
"""
from __future__ import absolute_import, division

import cmath
import math
from collections import namedtuple

from . import differences
from .common import R_MIN
from .errors import ConvergenceError
from .errors import DomainError
from .objects.space import BundleParam
from .objects.space import SpaceDescriptor
from .objects.space import SpectralParam
from .specfun import Hyp2F1Args
from .specfun import gamma
from .specfun import hyp2f1
from .specfun import rgamma

SPHERICAL_R_MAX = 12.0

BUNDLE_CONSTANTS = ('squared', 'tau')

_LOG_2 = math.log(2)
_LOG_PI = math.log(math.pi)


def log_cosh(r):
    r = abs(r)
    return r + math.log1p(math.exp(-2 * r)) - _LOG_2


def sech2(r):
    e = math.exp(-2 * abs(r))
    return 4 * e / (1 + e) ** 2


def _check_radius(r, r_min):
    if not r >= r_min:
        raise DomainError('r = {} is below the certified minimum {}'.format(r, r_min))


def _spectral(lam):
    return SpectralParam.from_value(lam).value


def _resolvent(constant, exponent, a, b, c, r):
    return constant * cmath.exp(exponent * log_cosh(r)) * hyp2f1(Hyp2F1Args(a, b, c, sech2(r)))


def hyperbolic_resolvent_half(n, lam, r, r_min=R_MIN):
    """Resolvent of H^n in the half-argument form, 2F1 at sech^2(r/2)."""
    if n < 1:
        raise DomainError('dimension must be >= 1, got {}'.format(n))
    _check_radius(r, r_min)
    lam = _spectral(lam)
    a = (n - 1) / 2 - 1j * lam
    constant = (cmath.exp(-(n - 2j * lam) * _LOG_2 - (n - 1) / 2 * _LOG_PI) *
                gamma(a) * rgamma(1 - 1j * lam))
    half = r / 2
    return (constant * cmath.exp((2j * lam - (n - 1)) * log_cosh(half)) *
            hyp2f1(Hyp2F1Args(a, 0.5 - 1j * lam, 1 - 2j * lam, sech2(half))))


def hyperbolic_constant(n, lam):
    s = ((n - 1) / 2 - 1j * lam) / 2
    return (math.pi ** (-n / 2) * gamma(s) * gamma(s + 0.5) * rgamma(1 - 1j * lam)) / 4


def hyperbolic_resolvent(n, lam, r, r_min=R_MIN):
    """Resolvent of H^n, 2F1 at sech^2 r."""
    if n < 1:
        raise DomainError('dimension must be >= 1, got {}'.format(n))
    _check_radius(r, r_min)
    lam = _spectral(lam)
    s = ((n - 1) / 2 - 1j * lam) / 2
    return _resolvent(hyperbolic_constant(n, lam), 1j * lam - (n - 1) / 2,
                      s, s + 0.5, 1 - 1j * lam, r)


def spherical_function(n, lam, r):
    """Normalised regular radial eigenfunction of H^n; equals 1 at r = 0."""
    if n < 2:
        raise DomainError('spherical functions need n >= 2, got {}'.format(n))
    if r < 0:
        raise DomainError('r must be non-negative, got {}'.format(r))
    if r > SPHERICAL_R_MAX:
        raise ConvergenceError('spherical function is not certified beyond r = {}'.format(
                                SPHERICAL_R_MAX))
    if r == 0:
        return 1 + 0j
    lam = complex(lam)
    rho = (n - 1) / 2
    return hyp2f1(Hyp2F1Args((rho - 1j * lam) / 2, (rho + 1j * lam) / 2, n / 2,
                             -math.sinh(r) ** 2))


def na_constant(space, lam):
    s = (space.sigma - 1j * lam) / 2
    return (math.pi ** (-(space.dim_n + 1) / 2) * gamma(s) * gamma(s - space.beta) *
            rgamma(1 - 1j * lam)) / 4


def na_resolvent(space, lam, r, r_min=R_MIN):
    """Resolvent kernel R_X(lam, r) of the shifted Laplacian on X."""
    space = SpaceDescriptor.from_dims(*space)
    _check_radius(r, r_min)
    lam = _spectral(lam)
    s = (space.sigma - 1j * lam) / 2
    return _resolvent(na_constant(space, lam), -space.sigma + 1j * lam,
                      s, s - space.beta, 1 - 1j * lam, r)


def bundle_constant(space, tau, lam, constant='squared'):
    """Normalisation of R_{X,tau}.

    'squared' uses Gamma(s)^2 with s = (sigma - i lam) / 2; 'tau' uses
    Gamma(s) Gamma(s - tau / 2), which agrees with na_constant at tau = 2 beta.
    """
    if constant not in BUNDLE_CONSTANTS:
        raise DomainError('unknown bundle constant {!r}'.format(constant))
    s = (space.sigma - 1j * lam) / 2
    second = gamma(s) if constant == 'squared' else gamma(s - tau / 2)
    return (math.pi ** (-(space.dim_n + 1) / 2) * gamma(s) * second *
            rgamma(1 - 1j * lam)) / 4


def bundle_resolvent(space, tau, lam, r, constant='squared', r_min=R_MIN):
    space = SpaceDescriptor.from_dims(*space)
    tau = BundleParam.from_value(tau).tau
    _check_radius(r, r_min)
    lam = _spectral(lam)
    s = (space.sigma - 1j * lam) / 2
    return _resolvent(bundle_constant(space, tau, lam, constant), -space.sigma + 1j * lam,
                      s, s - tau / 2, 1 - 1j * lam, r)


def green_normalization(space, lam, tau=None, constant='tau'):
    """Coefficient g with R(lam, r) ~ g * r^{-2e}, e = sigma - 1 - tau / 2, as r -> 0.

    tau=None selects the NA resolvent itself (tau = 2 beta). A fundamental
    solution has a leading coefficient that does not depend on lam.
    """
    space = SpaceDescriptor.from_dims(*space)
    lam = _spectral(lam)
    if tau is None:
        tau = 2 * space.beta
        normalization = na_constant(space, lam)
    else:
        tau = BundleParam.from_value(tau).tau
        normalization = bundle_constant(space, tau, lam, constant)
    e = space.sigma - 1 - tau / 2
    if not e > 0:
        raise DomainError('no algebraic singularity at r = 0 when sigma - 1 - tau/2 = {}'.format(e))
    s = (space.sigma - 1j * lam) / 2
    return normalization * gamma(1 - 1j * lam) * gamma(e) * rgamma(s) * rgamma(s - tau / 2)


def transform_kernel(space, r, rho):
    """W_X(r, rho), the lam-independent kernel taking R_Y to R_X."""
    space = SpaceDescriptor.from_dims(*space)
    if not space.transform_eligible:
        raise DomainError('{} is not transform-eligible'.format(space))
    if not 0 < r < rho:
        raise DomainError('need 0 < r < rho, got r={}, rho={}'.format(r, rho))
    k = space.dim_z
    prefactor = 2 * math.pi ** (k / 2) / gamma(k / 2).real
    # cosh^2 rho - cosh^2 r without cancellation as rho -> r
    gap = math.sinh(rho - r) * math.sinh(rho + r)
    return prefactor * math.cosh(r) ** (1 - k) * gap ** ((k - 2) / 2)


JacobiTerms = namedtuple('JacobiTerms', ['value', 'first', 'second', 'drift', 'potential'])


def jacobi_ode_terms(evaluator, dim_n, dim_z, lam, r, h=None):
    """f, f', f'' by finite differences plus the ODE coefficients at r.

    dim_n and dim_z may be non-integral (bundle kernels use dim_z = tau + 1).
    """
    h = differences.default_step(r) if h is None else h
    if not r - 2 * h > 0:
        raise DomainError('stencil [{}, {}] leaves (0, inf)'.format(r - 2 * h, r + 2 * h))
    f = differences.memoize(evaluator)
    sigma = (dim_n + dim_z) / 2
    lam = complex(lam)
    return JacobiTerms(value=f(r),
                       first=differences.derivative(f, r, h),
                       second=differences.second_derivative(f, r, h),
                       drift=dim_n / math.tanh(r) + dim_z * math.tanh(r),
                       potential=sigma ** 2 + lam ** 2)


def jacobi_ode_residual(evaluator, dim_n, dim_z, lam, r, h=None):
    """Scaled residual of f'' + (dim_n coth r + dim_z tanh r) f' + (sigma^2 + lam^2) f."""
    value, first, second, drift, potential = jacobi_ode_terms(evaluator, dim_n, dim_z, lam, r, h)
    residual = second + drift * first + potential * value
    scale = max(abs(value), abs(first), abs(second))
    if scale == 0:
        return 0.0
    return abs(residual) / scale
