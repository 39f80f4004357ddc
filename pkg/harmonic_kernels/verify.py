"""
Identity checks. Each check_* evaluates both sides of one identity and
returns an IdentityReport; numerical trouble and violated preconditions
become "skipped" reports instead of exceptions.

IDENTITIES maps the public identity names to their checks and the
parameters they accept; the command line and the suite runner both
dispatch through it.
"""
from __future__ import absolute_import, division

import logging
import math
from collections import namedtuple

from . import closedform
from . import differences
from . import kernels
from . import quadrature
from .common import TOLERANCE_FLOOR
from .common import parse_complex
from .common import parse_int
from .common import parse_real
from .errors import HarmonicKernelsError
from .errors import UsageError
from .objects.report import IdentityReport
from .objects.report import relative_error
from .objects.space import SpaceDescriptor
from .specfun import Hyp2F1Args
from .specfun import gamma
from .specfun import hyp2f1
from .specfun import nearest_nonpositive_integer
from .specfun import power
from .specfun import rgamma

logger = logging.getLogger(__name__)

# Share of an identity's tolerance handed to the quadrature.
QUADRATURE_SHARE = 1e-2

SYMBOLIC_TOLERANCE = 1e-10
DIFFERENCE_TOLERANCE = 1e-4

# Points at which the two key-lemma kernels are compared, as multiples of x.
KERNEL_SAMPLES = (1.5, 2.0, 5.0)


class PreconditionFailed(Exception):
    pass


def _require(condition, message):
    if not condition:
        raise PreconditionFailed(message)


def _quadrature_tolerance(tol):
    return max(TOLERANCE_FLOOR, tol * QUADRATURE_SHARE)


def _f(a, b, c, z):
    return hyp2f1(Hyp2F1Args(a, b, c, z))


def _run(identity, params, tol, sides, *args):
    """Evaluate sides(*args) -> (lhs, rhs, quad_error, extra) into a report."""
    try:
        lhs, rhs, quad_error, extra = sides(*args)
    except PreconditionFailed as err:
        logger.info('%s skipped: %s', identity, err)
        return IdentityReport.skipped(identity, params, tol, str(err))
    except (HarmonicKernelsError, ArithmeticError) as err:
        logger.warning('%s skipped after %s: %s', identity, type(err).__name__, err)
        return IdentityReport.skipped(identity, params, tol, str(err), error=err)
    params = dict(params)
    params.update(extra)
    report = IdentityReport.from_sides(identity, params, lhs, rhs, tol, quad_error)
    logger.debug('%s %s: rel_err=%g status=%s', identity, params, report.rel_err, report.status)
    return report


def _integrate(regular, lower, exponent, tol):
    """int_lower^inf (y - lower)^exponent regular(y) dy and its absolute error."""
    def integrand(y):
        return power(y - lower, exponent) * regular(y)

    result = quadrature.integrate_semi_infinite(
        quadrature.Integrand.build(integrand, lower, exponent), _quadrature_tolerance(tol))
    return result.value, result.absolute_error


def _lemma31_integral(a, b, c, mu, x, tol):
    """Gamma(b+mu)/(Gamma(b)Gamma(mu)) int_x^inf y^{-b-mu} (y-x)^{mu-1} 2F1(a,b+mu;c;1/y) dy."""
    def regular(y):
        return power(y, -b - mu) * _f(a, b + mu, c, 1 / y)

    value, error = _integrate(regular, x, mu - 1, tol)
    prefactor = gamma(b + mu) * rgamma(b) * rgamma(mu)
    return prefactor * value, abs(prefactor) * error


def _lemma31_sides(a, b, c, mu, x, tol):
    _require(mu.real > 0, 'Re mu must be positive')
    _require(b.real > 0, 'Re b must be positive')
    _require(nearest_nonpositive_integer(c) is None, 'c must not be a non-positive integer')
    _require(x > 1, 'x must exceed 1')
    lhs = power(x, -b) * _f(a, b, c, 1 / x)
    rhs, quad_error = _lemma31_integral(a, b, c, mu, x, tol)
    return lhs, rhs, quad_error, {}


def check_lemma31(a, b, c, mu, x, tol=1e-8):
    a, b, c, mu = complex(a), complex(b), complex(c), complex(mu)
    params = dict(a=a, b=b, c=c, mu=mu, x=x)
    return _run('lemma31', params, tol, _lemma31_sides, a, b, c, mu, float(x), tol)


def _lemma32_sides(a, b, c, nu, x, tol):
    _require(nu.real > 0, 'Re nu must be positive')
    _require(c.real > nu.real, 'Re c must exceed Re nu')
    _require(nearest_nonpositive_integer(c - nu) is None, 'c - nu must not be a pole')
    _require(x > 1, 'x must exceed 1')
    series = _f(a, b, c, 1 / x)
    lhs = power(x, nu - c) * series

    def regular(y):
        return power(y, -c) * _f(a, b, c - nu, 1 / y)

    value, error = _integrate(regular, x, nu - 1, tol)
    prefactor = gamma(c) * rgamma(c - nu) * rgamma(nu)
    rhs = prefactor * value
    # the exponent as printed, x^{c - nu}
    printed = power(x, c - nu) * series
    return lhs, rhs, abs(prefactor) * error, {'printed_rel_err': relative_error(printed, rhs)}


def check_lemma32(a, b, c, nu, x, tol=1e-8):
    """x^{nu-c} 2F1(a,b;c;1/x) against its beta-type integral over 2F1(a,b;c-nu;1/y).

    The printed exponent x^{c-nu} is evaluated too; its discrepancy is kept
    as params['printed_rel_err'].
    """
    a, b, c, nu = complex(a), complex(b), complex(c), complex(nu)
    params = dict(a=a, b=b, c=c, nu=nu, x=x)
    return _run('lemma32', params, tol, _lemma32_sides, a, b, c, nu, float(x), tol)


KEY_LEMMA_VARIANTS = ('plain', 'tilde')


def _key_lemma_integral(kernel_params, weight_exponent, a, b, c, mu, nu, x, tol):
    ka, kb = kernel_params

    def regular(y):
        kernel = _f(ka, kb, mu + nu, 1 - y / x)
        return kernel * power(y, weight_exponent) * _f(a + mu, b + nu, c, 1 / y)

    value, error = _integrate(regular, x, mu + nu - 1, tol)
    prefactor = (gamma(a + mu) * gamma(b + nu) * rgamma(a) * rgamma(b) * rgamma(mu + nu))
    return prefactor * value, abs(prefactor) * error


def _kernel_relation_error(a, b, mu, nu, x):
    worst = 0.0
    for scale in KERNEL_SAMPLES:
        y = scale * x
        plain = _f(mu, a - b + mu, mu + nu, 1 - y / x)
        tilde = _f(nu, b - a + nu, mu + nu, 1 - y / x)
        worst = max(worst, relative_error(tilde, power(y / x, (a + mu) - (b + nu)) * plain))
    return worst


def _key_lemma_sides(a, b, c, mu, nu, x, tol, variant):
    _require(variant in KEY_LEMMA_VARIANTS, 'unknown variant {!r}'.format(variant))
    _require(a.real > 0 and b.real > 0 and mu.real > 0, 'Re a, Re b, Re mu must be positive')
    _require(x > 1, 'x must exceed 1')
    series = _f(a, b, c, 1 / x)

    if variant == 'plain':
        lhs = power(x, -b + mu) * series
        if nu == 0:
            # kernel reduces to (y/x)^{b-a-mu}: the lemma31 integral with a and b swapped
            integral, error = _lemma31_integral(b, a, c, mu, x, tol)
            scale = power(x, a - b + mu)
            return lhs, scale * integral, abs(scale) * error, {'path': 'lemma31'}
        _require(nu.real > 0, 'Re nu must be positive (or nu = 0)')
        rhs, error = _key_lemma_integral((mu, a - b + mu), -b - nu, a, b, c, mu, nu, x, tol)
        return lhs, rhs, error, {'path': 'kernel'}

    _require(nu.real > 0, 'Re nu must be positive')
    lhs = power(x, -a + nu) * series
    rhs, error = _key_lemma_integral((nu, b - a + nu), -a - mu, a, b, c, mu, nu, x, tol)
    extra = {'path': 'kernel',
             'kernel_relation_err': _kernel_relation_error(a, b, mu, nu, x)}
    try:
        printed, _ = _key_lemma_integral((nu, a - b + nu), -a - mu, a, b, c, mu, nu, x, tol)
        extra['printed_rel_err'] = relative_error(printed, rhs)
    except (HarmonicKernelsError, ArithmeticError) as err:
        logger.info('printed tilde kernel not integrable here: %s', err)
        extra['printed_rel_err'] = None
    return lhs, rhs, error, extra


def check_key_lemma(a, b, c, mu, nu, x, tol=1e-8, variant='plain'):
    """key-lemma identity: x^{-b+mu} 2F1(a,b;c;1/x) as an integral against 2F1(a+mu,b+nu;c;1/y).

    The tilde variant swaps (a, mu) with (b, nu). Its kernel is taken as
    2F1(nu, b-a+nu; mu+nu; 1-y/x), the form consistent with
    W~ = (y/x)^{(a+mu)-(b+nu)} W; the kernel with a-b+nu is also integrated
    and its discrepancy kept in params['printed_rel_err'].
    """
    a, b, c, mu, nu = complex(a), complex(b), complex(c), complex(mu), complex(nu)
    params = dict(a=a, b=b, c=c, mu=mu, nu=nu, x=x, variant=variant)
    return _run('key-lemma', params, tol, _key_lemma_sides, a, b, c, mu, nu, float(x), tol, variant)


def _quadratic_sides(n, lam, r):
    lhs = kernels.hyperbolic_resolvent_half(n, lam, r)
    rhs = kernels.hyperbolic_resolvent(n, lam, r)
    return lhs, rhs, 0.0, {'ratio': lhs / rhs}


def check_quadratic_transform(n, lam, r, tol=1e-8):
    params = {'n': n, 'lambda': complex(lam), 'r': r}
    return _run('quadratic-transform', params, tol, _quadratic_sides, n, lam, r)


RECURRENCE_PATHS = ('auto', 'symbolic', 'fd')


def _recurrence_sides(n, lam, r, path):
    _require(n >= 1, 'n must be at least 1')
    _require(path in RECURRENCE_PATHS, 'unknown path {!r}'.format(path))
    if path == 'auto':
        path = 'symbolic' if n % 2 else 'fd'
    scale = -1 / (2 * math.pi * math.sinh(r))

    if path == 'symbolic':
        _require(n % 2 == 1, 'the symbolic path needs odd n')
        m = (n - 1) // 2
        derivative = closedform.differentiate(closedform.d_power(m))
        lhs = scale * closedform.odd_constant(m, lam) * closedform.eval_term_sum(derivative, lam, r)
        rhs = closedform.odd_resolvent(m + 1, lam, r)
        # the recurrence in exact arithmetic: csch d/dr D^m = D^{m+1}, C_{m+1} = -C_m / 2 pi
        exact = derivative.shifted(1) == closedform.d_power(m + 1)
        return lhs, rhs, 0.0, {'path': path, 'exact': exact}

    def resolvent(rho):
        return kernels.hyperbolic_resolvent(n, lam, rho)

    lhs = scale * differences.derivative(differences.memoize(resolvent), r)
    rhs = kernels.hyperbolic_resolvent(n + 2, lam, r)
    return lhs, rhs, 0.0, {'path': path}


def check_recurrence(n, lam, r, tol=None, path='auto'):
    """-1/(2 pi sinh r) d/dr R_n = R_{n+2}.

    Odd n defaults to the exact TermSum derivative, even n to finite
    differences of the hypergeometric form.
    """
    if tol is None:
        symbolic = path == 'symbolic' or (path == 'auto' and n % 2 == 1)
        tol = SYMBOLIC_TOLERANCE if symbolic else DIFFERENCE_TOLERANCE
    params = {'n': n, 'lambda': complex(lam), 'r': r}
    return _run('recurrence', params, tol, _recurrence_sides, n, lam, r, path)


def _transform_sides(space, lam, r, tol):
    _require(space.transform_eligible, '{} is not transform-eligible'.format(tuple(space)))
    lhs = kernels.na_resolvent(space, lam, r)
    result = quadrature.integrate_transform(space, lam, r, _quadrature_tolerance(tol))
    return lhs, result.value, result.absolute_error, {'ratio': lhs / result.value}


def check_transform(space, lam, r, tol=1e-6):
    space = SpaceDescriptor.from_dims(*space)
    params = {'dim_n': space.dim_n, 'dim_z': space.dim_z, 'lambda': complex(lam), 'r': r}
    return _run('transform', params, tol, _transform_sides, space, lam, r, tol)


def _bundle_transform_sides(space, tau, lam, r, tol, constant):
    _require(tau > 0, 'tau = 0 is the degenerate nu = 0 case')
    _require((space.dim_n + space.dim_z) % 2 == 0, 'sigma must be an integer')
    lhs = kernels.bundle_resolvent(space, tau, lam, r, constant)
    result = quadrature.integrate_bundle_transform(space, tau, lam, r, _quadrature_tolerance(tol))
    extra = {'constant': constant, 'ratio': lhs / result.value}
    if constant == 'tau':
        # key-lemma bookkeeping with mu = 1/2, nu = tau/2 gives this fitted ratio
        extra['expected_ratio'] = math.pi ** ((space.dim_z - tau - 1) / 2)
    return lhs, result.value, result.absolute_error, extra


def check_bundle_transform(space, tau, lam, r, tol=1e-6, constant='tau'):
    """Test R_{X,tau} against the transform with kernel

        W_{X,tau}(r, rho) = 2 pi^{(tau+1)/2} / Gamma((tau+1)/2)
                            cosh^{-tau}(r) (cosh^2 rho - cosh^2 r)^{(tau-1)/2}.

    A failure is a finding about W_{X,tau}; params['ratio'] carries the
    fitted constant.
    """
    space = SpaceDescriptor.from_dims(*space)
    params = {'dim_n': space.dim_n, 'dim_z': space.dim_z, 'tau': tau,
              'lambda': complex(lam), 'r': r}
    return _run('bundle-transform', params, tol, _bundle_transform_sides,
                space, float(tau), lam, r, tol, constant)


def _bundle_constant_sides(space, tau, lam, lam_ref, constant):
    lhs = kernels.green_normalization(space, lam, tau, constant)
    rhs = kernels.green_normalization(space, lam_ref, tau, constant)
    return lhs, rhs, 0.0, {'constant': constant}


def check_bundle_constant(space, tau, lam, tol=1e-10, constant='squared', lam_ref=1.0):
    """Is the r -> 0 singular coefficient of R_{X,tau} the same at lam and lam_ref?

    A fundamental solution must have a lam-independent leading singularity,
    which the ODE alone cannot detect.
    """
    space = SpaceDescriptor.from_dims(*space)
    params = {'dim_n': space.dim_n, 'dim_z': space.dim_z, 'tau': tau,
              'lambda': complex(lam), 'lambda_ref': complex(lam_ref)}
    return _run('bundle-constant', params, tol, _bundle_constant_sides,
                space, float(tau), lam, lam_ref, constant)


ODE_KERNELS = ('na-resolvent', 'bundle-resolvent', 'hyperbolic-resolvent',
               'hyperbolic-resolvent-half', 'spherical-function', 'odd-resolvent')


def _ode_setup(kernel, lam, n, space, tau, constant):
    """(evaluator, dim_n, dim_z) of the Jacobi equation the kernel solves."""
    if kernel == 'na-resolvent':
        _require(space is not None, 'na-resolvent needs dim_n and dim_z')

        def evaluator(rho):
            return kernels.na_resolvent(space, lam, rho)

        return evaluator, space.dim_n, space.dim_z

    if kernel == 'bundle-resolvent':
        _require(space is not None and tau is not None,
                 'bundle-resolvent needs dim_n, dim_z and tau')

        def evaluator(rho):
            return kernels.bundle_resolvent(space, tau, lam, rho, constant)

        # same sigma, with tau / 2 in the place of beta
        return evaluator, space.dim_n + space.dim_z - tau - 1, tau + 1

    _require(n is not None, '{} needs n'.format(kernel))
    if kernel == 'odd-resolvent':
        _require(n % 2 == 1, 'odd-resolvent needs odd n')
        return closedform.odd_resolvent_kernel((n - 1) // 2, lam), n - 1, 0

    function = {
        'hyperbolic-resolvent': kernels.hyperbolic_resolvent,
        'hyperbolic-resolvent-half': kernels.hyperbolic_resolvent_half,
        'spherical-function': kernels.spherical_function,
    }[kernel]

    def evaluator(rho):
        return function(n, lam, rho)

    return evaluator, n - 1, 0


def _ode_sides(kernel, lam, r, n, space, tau, constant):
    _require(kernel in ODE_KERNELS, 'unknown kernel {!r}'.format(kernel))
    evaluator, dim_n, dim_z = _ode_setup(kernel, lam, n, space, tau, constant)
    terms = kernels.jacobi_ode_terms(evaluator, dim_n, dim_z, lam, r)
    lhs = terms.second
    rhs = -terms.drift * terms.first - terms.potential * terms.value
    scale = max(abs(terms.value), abs(terms.first), abs(terms.second))
    residual = abs(lhs - rhs) / scale if scale else 0.0
    return lhs, rhs, 0.0, {'residual': residual}


def check_ode(kernel, lam, r, tol=DIFFERENCE_TOLERANCE, n=None, space=None, tau=None,
              constant='squared'):
    """f'' against -(drift f' + (sigma^2 + lam^2) f) for one radial kernel."""
    if space is not None:
        space = SpaceDescriptor.from_dims(*space)
    params = {'kernel': kernel, 'lambda': complex(lam), 'r': r}
    if n is not None:
        params['n'] = n
    if space is not None:
        params.update(dim_n=space.dim_n, dim_z=space.dim_z)
    if tau is not None:
        params.update(tau=tau, constant=constant)
    return _run('ode', params, tol, _ode_sides, kernel, complex(lam), r, n, space,
                None if tau is None else float(tau), constant)


def _magnus_sides(a, c, z):
    _require(0 < z < 1, 'z must lie in (0, 1)')
    root = math.sqrt(z)
    lhs = _f(2 * a, c - 0.5, 2 * c - 1, 2 * root / (1 + root))
    rhs = power(1 + root, 2 * a) * _f(a, a + 0.5, c, z)
    return lhs, rhs, 0.0, {}


def check_magnus_quadratic(a, c, z, tol=1e-10):
    """2F1(2a, c-1/2; 2c-1; 2 sqrt z/(1+sqrt z)) = (1+sqrt z)^{2a} 2F1(a, a+1/2; c; z)."""
    a, c = complex(a), complex(c)
    return _run('magnus-quadratic', {'a': a, 'c': c, 'z': z}, tol, _magnus_sides, a, c, float(z))


def _duplication_sides(a):
    lhs = gamma(2 * a)
    rhs = gamma(a) * gamma(a + 0.5) * power(2, 2 * a - 1) / math.sqrt(math.pi)
    return lhs, rhs, 0.0, {}


def check_duplication(a, tol=1e-11):
    a = complex(a)
    return _run('duplication', {'a': a}, tol, _duplication_sides, a)


def _elementary_sides(a, z):
    _require(-1 < z < 1, 'z must lie in (-1, 1)')
    lhs = _f(a, a + 0.5, 2 * a + 1, z * z)
    rhs = power(2, 2 * a) * power(1 + math.sqrt(1 - z * z), -2 * a)
    return lhs, rhs, 0.0, {}


def check_elementary_2f1(a, z, tol=1e-12):
    a = complex(a)
    return _run('elementary-2f1', {'a': a, 'z': z}, tol, _elementary_sides, a, float(z))


def _collapse_sides(beta, x, y):
    _require(y > x > 0, 'need y > x > 0')
    gap = power(y - x, beta - 0.5)
    lhs = gap * _f(0.5, beta + 0.5, beta + 0.5, 1 - y / x)
    rhs = gap * math.sqrt(x / y)
    return lhs, rhs, 0.0, {}


def check_kernel_collapse(beta, x, y, tol=1e-12):
    """K_beta(x, y) = (y-x)^{beta-1/2} 2F1(1/2, beta+1/2; beta+1/2; 1-y/x) = (y-x)^{beta-1/2} (x/y)^{1/2}."""
    return _run('kernel-collapse', {'beta': beta, 'x': x, 'y': y}, tol, _collapse_sides,
                float(beta), float(x), float(y))


def _differential_sides(a, b, c, z):
    def series(w):
        return _f(a, b, c, w)

    f = differences.memoize(series)
    # z^{1-a} d/dz [z^a F] = a F + z F'
    lhs = a * f(z) + z * differences.derivative(f, z)
    rhs = a * _f(a + 1, b, c, z)
    return lhs, rhs, 0.0, {}


def check_differential_formula(a, b, c, z, tol=1e-6):
    """(a)_1 z^{a-1} 2F1(a+1,b;c;z) = d/dz [z^a 2F1(a,b;c;z)], branch-free form."""
    a, b, c = complex(a), complex(b), complex(c)
    return _run('differential-formula', {'a': a, 'b': b, 'c': c, 'z': z}, tol,
                _differential_sides, a, b, c, float(z))


REQUIRED = object()

Parameter = namedtuple('Parameter', ['name', 'kind', 'default', 'choices'])


def parameter(name, kind, default=REQUIRED, choices=None):
    return Parameter(name, kind, default, choices)


IdentityCheck = namedtuple('IdentityCheck', ['check', 'parameters', 'tolerance'])

_SPACE = (parameter('dim_n', 'int'), parameter('dim_z', 'int'))

IDENTITIES = {
    'lemma31': IdentityCheck(check_lemma31, (
        parameter('a', 'complex'), parameter('b', 'complex'), parameter('c', 'complex'),
        parameter('mu', 'complex'), parameter('x', 'real')), 1e-6),
    'lemma32': IdentityCheck(check_lemma32, (
        parameter('a', 'complex'), parameter('b', 'complex'), parameter('c', 'complex'),
        parameter('nu', 'complex'), parameter('x', 'real')), 1e-6),
    'key-lemma': IdentityCheck(check_key_lemma, (
        parameter('a', 'complex'), parameter('b', 'complex'), parameter('c', 'complex'),
        parameter('mu', 'complex'), parameter('nu', 'complex'), parameter('x', 'real'),
        parameter('variant', 'choice', 'plain', KEY_LEMMA_VARIANTS)), 1e-6),
    'quadratic-transform': IdentityCheck(check_quadratic_transform, (
        parameter('n', 'int'), parameter('lambda', 'complex'), parameter('r', 'real')), 1e-8),
    'recurrence': IdentityCheck(check_recurrence, (
        parameter('n', 'int'), parameter('lambda', 'complex'), parameter('r', 'real'),
        parameter('path', 'choice', 'auto', RECURRENCE_PATHS)), None),
    'transform': IdentityCheck(check_transform, _SPACE + (
        parameter('lambda', 'complex'), parameter('r', 'real')), 1e-6),
    'bundle-transform': IdentityCheck(check_bundle_transform, _SPACE + (
        parameter('tau', 'real'), parameter('lambda', 'complex'), parameter('r', 'real'),
        parameter('constant', 'choice', 'tau', kernels.BUNDLE_CONSTANTS)), 1e-6),
    'bundle-constant': IdentityCheck(check_bundle_constant, _SPACE + (
        parameter('tau', 'real'), parameter('lambda', 'complex'),
        parameter('lambda_ref', 'complex', 1.0),
        parameter('constant', 'choice', 'squared', kernels.BUNDLE_CONSTANTS)), 1e-10),
    'ode': IdentityCheck(check_ode, (
        parameter('kernel', 'choice', REQUIRED, ODE_KERNELS), parameter('lambda', 'complex'),
        parameter('r', 'real'), parameter('n', 'int', None), parameter('dim_n', 'int', None),
        parameter('dim_z', 'int', None), parameter('tau', 'real', None),
        parameter('constant', 'choice', 'squared', kernels.BUNDLE_CONSTANTS)), 1e-4),
    'magnus-quadratic': IdentityCheck(check_magnus_quadratic, (
        parameter('a', 'complex'), parameter('c', 'complex'), parameter('z', 'real')), 1e-10),
    'duplication': IdentityCheck(check_duplication, (parameter('a', 'complex'),), 1e-11),
    'elementary-2f1': IdentityCheck(check_elementary_2f1, (
        parameter('a', 'complex'), parameter('z', 'real')), 1e-12),
    'kernel-collapse': IdentityCheck(check_kernel_collapse, (
        parameter('beta', 'real'), parameter('x', 'real'), parameter('y', 'real')), 1e-12),
    'differential-formula': IdentityCheck(check_differential_formula, (
        parameter('a', 'complex'), parameter('b', 'complex'), parameter('c', 'complex'),
        parameter('z', 'real')), 1e-6),
}

_CONVERTERS = {
    'complex': parse_complex,
    'real': parse_real,
    'int': parse_int,
}

# config / command line name -> keyword of the check functions
_KEYWORDS = {'lambda': 'lam', 'lambda_ref': 'lam_ref'}


def convert_value(parameter, value):
    if value is None:
        return None
    if parameter.kind == 'choice':
        value = str(value)
        if value not in parameter.choices:
            raise UsageError('{} must be one of {}, got {!r}'.format(
                                parameter.name, ', '.join(parameter.choices), value))
        return value
    return _CONVERTERS[parameter.kind](value)


def bind_parameters(owner, parameters, params):
    """Convert raw params against a Parameter list; defaults fill the gaps."""
    known = {p.name: p for p in parameters}
    unknown = sorted(set(params) - set(known))
    if unknown:
        raise UsageError('{} does not take {}'.format(owner, ', '.join(unknown)))
    converted = {}
    for name, parameter in known.items():
        if name in params:
            converted[name] = convert_value(parameter, params[name])
        elif parameter.default is REQUIRED:
            raise UsageError('{} needs --{}'.format(owner, name.replace('_', '-')))
        else:
            converted[name] = parameter.default
    return converted


def convert_parameters(identity, params):
    """Validate raw parameters for identity; returns the converted mapping."""
    if identity not in IDENTITIES:
        raise UsageError('unknown identity {!r}; choose from {}'.format(
                            identity, ', '.join(sorted(IDENTITIES))))
    return bind_parameters(identity, IDENTITIES[identity].parameters, params)


def default_tolerance(identity):
    return IDENTITIES[identity].tolerance


def identity_arguments(identity, params, tol=None):
    """Keyword arguments of the check for raw (string or number) parameters.

    Raises UsageError for anything the check could not be called with.
    """
    converted = convert_parameters(identity, params)
    kwargs = {}
    for name, value in converted.items():
        kwargs[_KEYWORDS.get(name, name)] = value
    dim_n = kwargs.pop('dim_n', None)
    dim_z = kwargs.pop('dim_z', None)
    if dim_n is not None or dim_z is not None:
        if dim_n is None or dim_z is None:
            raise UsageError('{} needs both dim_n and dim_z'.format(identity))
        try:
            kwargs['space'] = SpaceDescriptor.from_dims(dim_n, dim_z)
        except HarmonicKernelsError as err:
            raise UsageError(str(err))
    if tol is None:
        tol = default_tolerance(identity)
    if tol is not None:
        if tol < TOLERANCE_FLOOR and identity in QUADRATURE_IDENTITIES:
            raise UsageError('tolerance must be at least {}'.format(TOLERANCE_FLOOR))
        kwargs['tol'] = tol
    return kwargs


def run_identity(identity, params, tol=None):
    """Run one identity from raw parameters."""
    return IDENTITIES[identity].check(**identity_arguments(identity, params, tol))


QUADRATURE_IDENTITIES = frozenset(['lemma31', 'lemma32', 'key-lemma', 'transform',
                                   'bundle-transform'])
