"""
Direct evaluation of the special functions and kernels by name, as used by
the `eval` and `sweep` commands. Parameters arrive raw (strings from the
command line) and are converted against EVAL_TARGETS.
"""
from __future__ import absolute_import, division

import logging
from collections import namedtuple

import numpy as np

from . import closedform
from . import kernels
from . import quadrature
from . import specfun
from .errors import DomainError
from .errors import UsageError
from .objects.space import SpaceDescriptor
from .verify import bind_parameters
from .verify import parameter

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-8


EvalTarget = namedtuple('EvalTarget', ['function', 'parameters', 'radial'])


def _space(params):
    return SpaceDescriptor.from_dims(params['dim_n'], params['dim_z'])


def _gamma(params, tol):
    return specfun.gamma(params['z'])


def _rgamma(params, tol):
    return specfun.rgamma(params['z'])


def _pochhammer(params, tol):
    if params['k'] < 0:
        raise DomainError('k must be non-negative, got {}'.format(params['k']))
    return specfun.pochhammer(params['a'], params['k'])


def _hyp2f1(params, tol):
    return specfun.hyp2f1(specfun.Hyp2F1Args.from_values(
        params['a'], params['b'], params['c'], params['z']))


def _odd_resolvent(params, tol):
    if params['m'] < 0:
        raise DomainError('m must be non-negative, got {}'.format(params['m']))
    return closedform.odd_resolvent(params['m'], params['lambda'], params['r'])


def _hyperbolic_resolvent(params, tol):
    return kernels.hyperbolic_resolvent(params['n'], params['lambda'], params['r'])


def _hyperbolic_resolvent_half(params, tol):
    return kernels.hyperbolic_resolvent_half(params['n'], params['lambda'], params['r'])


def _spherical_function(params, tol):
    return kernels.spherical_function(params['n'], params['lambda'], params['r'])


def _na_resolvent(params, tol):
    return kernels.na_resolvent(_space(params), params['lambda'], params['r'])


def _bundle_resolvent(params, tol):
    return kernels.bundle_resolvent(_space(params), params['tau'], params['lambda'],
                                    params['r'], params['constant'])


def _transform_kernel(params, tol):
    return complex(kernels.transform_kernel(_space(params), params['r'], params['rho']))


def _transform_integral(params, tol):
    result = quadrature.integrate_transform(_space(params), params['lambda'], params['r'], tol)
    logger.info('transform integral: relative error estimate %g after %d evaluations',
                result.error_estimate, result.evaluations)
    return result.value


def _green_normalization(params, tol):
    return kernels.green_normalization(_space(params), params['lambda'], params['tau'],
                                       params['constant'])


_DIMS = (parameter('dim_n', 'int'), parameter('dim_z', 'int'))
_LAMBDA = parameter('lambda', 'complex')
_R = parameter('r', 'real')
_CONSTANT = parameter('constant', 'choice', 'squared', kernels.BUNDLE_CONSTANTS)

EVAL_TARGETS = {
    'gamma': EvalTarget(_gamma, (parameter('z', 'complex'),), False),
    'rgamma': EvalTarget(_rgamma, (parameter('z', 'complex'),), False),
    'pochhammer': EvalTarget(_pochhammer, (
        parameter('a', 'complex'), parameter('k', 'int')), False),
    'hyp2f1': EvalTarget(_hyp2f1, (
        parameter('a', 'complex'), parameter('b', 'complex'), parameter('c', 'complex'),
        parameter('z', 'real')), False),
    'odd-resolvent': EvalTarget(_odd_resolvent, (parameter('m', 'int'), _LAMBDA, _R), True),
    'hyperbolic-resolvent': EvalTarget(_hyperbolic_resolvent, (
        parameter('n', 'int'), _LAMBDA, _R), True),
    'hyperbolic-resolvent-half': EvalTarget(_hyperbolic_resolvent_half, (
        parameter('n', 'int'), _LAMBDA, _R), True),
    'spherical-function': EvalTarget(_spherical_function, (
        parameter('n', 'int'), _LAMBDA, _R), True),
    'na-resolvent': EvalTarget(_na_resolvent, _DIMS + (_LAMBDA, _R), True),
    'bundle-resolvent': EvalTarget(_bundle_resolvent, _DIMS + (
        parameter('tau', 'real'), _LAMBDA, _R, _CONSTANT), True),
    'transform-kernel': EvalTarget(_transform_kernel, _DIMS + (
        _R, parameter('rho', 'real')), True),
    'transform-integral': EvalTarget(_transform_integral, _DIMS + (_LAMBDA, _R), True),
    'green-normalization': EvalTarget(_green_normalization, _DIMS + (
        _LAMBDA, parameter('tau', 'real', None),
        parameter('constant', 'choice', 'tau', kernels.BUNDLE_CONSTANTS)), False),
}


def convert_target(target, params):
    if target not in EVAL_TARGETS:
        raise UsageError('unknown target {!r}; choose from {}'.format(
                            target, ', '.join(sorted(EVAL_TARGETS))))
    return bind_parameters(target, EVAL_TARGETS[target].parameters, params)


def evaluate(target, params, tol=None):
    """Value of target at raw params, as a complex number.

    DomainError means the input is outside the function's domain; numerical
    errors (PoleError, ConvergenceError, overflow) propagate unchanged.
    """
    converted = convert_target(target, params)
    tol = DEFAULT_TOLERANCE if tol is None else tol
    value = complex(EVAL_TARGETS[target].function(converted, tol))
    logger.debug('%s %s = %s', target, converted, value)
    return value


def sweep_grid(r_min, r_max, points):
    if points < 2:
        raise UsageError('a sweep needs at least 2 points, got {}'.format(points))
    if not 0 < r_min < r_max:
        raise UsageError('need 0 < r-min < r-max, got {} and {}'.format(r_min, r_max))
    return np.linspace(r_min, r_max, points)


def sweep(target, params, r_min, r_max, points, tol=None):
    """(r, value) pairs of a radial target over an evenly spaced r grid."""
    if target in EVAL_TARGETS and not EVAL_TARGETS[target].radial:
        raise UsageError('{} does not depend on r'.format(target))
    if 'r' in params:
        raise UsageError('sweep sets r itself; drop --r')
    grid = sweep_grid(r_min, r_max, points)
    logger.info('sweeping %s over %d radii in [%g, %g]', target, points, r_min, r_max)
    rows = []
    for r in grid:
        point = dict(params)
        point['r'] = float(r)
        rows.append((float(r), evaluate(target, point, tol)))
    return rows
