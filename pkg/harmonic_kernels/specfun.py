"""
Complex Gamma, Pochhammer symbols and the Gauss hypergeometric function 2F1.

hyp2f1 sums the power series directly on [0, 0.999], maps [-50, 0) into
(0, 1) with the Pfaff transformation, and for arguments below -50 uses the
connection formula around infinity, whose inner series converge in a handful
of terms.
"""
from __future__ import absolute_import, division

import cmath
import functools
import logging
import math
from collections import namedtuple

from .common import POLE_TOLERANCE
from .errors import ConvergenceError
from .errors import DomainError
from .errors import PoleError

logger = logging.getLogger(__name__)


_LANCZOS_G = 7
_LANCZOS_BASE = 0.99999999999980993
_LANCZOS_COEFFICIENTS = (
    676.5203681218851, -1259.1392167224028, 771.32342877765313,
    -176.61502916214059, 12.507343278686905, -0.13857109526572012,
    9.9843695780195716e-6, 1.5056327351493116e-7)
_SQRT_TWO_PI = math.sqrt(2 * math.pi)
# math.gamma overflows above this
_REAL_GAMMA_MAX = 171.0

SERIES_EPSILON = 1e-17
SERIES_QUIET_TERMS = 3
SERIES_BUDGET = 200000

# Certified argument interval of the series + Pfaff paths.
Z_MAX = 0.999
Z_PFAFF_MIN = -50.0

# Half-width of the symmetric perturbation used when a - b is an integer on
# the reciprocal-argument path.
CONNECTION_DELTA = 1e-4


def nearest_nonpositive_integer(z, tolerance=POLE_TOLERANCE):
    """Return n if z is within tolerance of the integer n <= 0, else None."""
    z = complex(z)
    n = round(z.real)
    if n > 0:
        return None
    if abs(z - n) <= tolerance:
        return int(n)
    return None


def _sin_pi(z):
    # Reduce by the nearest integer so sin(pi z) keeps relative accuracy
    # close to the zeros.
    n = round(z.real)
    s = cmath.sin(math.pi * (z - n))
    return -s if n % 2 else s


def gamma(z):
    z = complex(z)
    if nearest_nonpositive_integer(z) is not None:
        raise PoleError('Gamma has a pole at {}'.format(z))
    if z.imag == 0 and z.real < _REAL_GAMMA_MAX:
        # exact at the positive integers
        return complex(math.gamma(z.real), 0.0)
    if z.real < 0.5:
        return math.pi / (_sin_pi(z) * gamma(1 - z))
    z -= 1
    x = _LANCZOS_BASE
    for i, p in enumerate(_LANCZOS_COEFFICIENTS):
        x += p / (z + i + 1)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_TWO_PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * x


def rgamma(z):
    """1 / Gamma(z), zero at the poles of Gamma."""
    z = complex(z)
    if nearest_nonpositive_integer(z) is not None:
        return 0j
    return 1 / gamma(z)


def pochhammer(a, k):
    if k < 0 or int(k) != k:
        raise DomainError('pochhammer needs a non-negative integer k, got {}'.format(k))
    result = 1
    for i in range(int(k)):
        result *= a + i
    return result


def power(w, s):
    """Principal branch w**s, restricted to Re w > 0."""
    w = complex(w)
    if not w.real > 0:
        raise DomainError('power base {} is not in the right half-plane'.format(w))
    if s == 0:
        return 1 + 0j
    return cmath.exp(s * cmath.log(w))


class Hyp2F1Args(namedtuple('Hyp2F1Args', ['a', 'b', 'c', 'z'])):

    __slots__ = ()

    @staticmethod
    def from_values(a, b, c, z):
        args = Hyp2F1Args(complex(a), complex(b), complex(c), float(z))
        args.validate()
        return args

    def validate(self):
        if not math.isfinite(self.z):
            raise DomainError('2F1 argument {} is not finite'.format(self.z))
        if nearest_nonpositive_integer(self.c) is not None:
            raise PoleError('2F1 is undefined for c = {}'.format(self.c))
        if self.z > Z_MAX:
            raise DomainError('2F1 argument {} exceeds {}'.format(self.z, Z_MAX))

    @property
    def terminates(self):
        return (nearest_nonpositive_integer(self.a, 0) is not None or
                nearest_nonpositive_integer(self.b, 0) is not None)


def _series(a, b, c, z):
    """Sum the 2F1 power series; |z| < 1 or a terminating parameter."""
    total = 1 + 0j
    term = 1 + 0j
    quiet = 0
    for k in range(SERIES_BUDGET):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if abs(term) <= SERIES_EPSILON * abs(total):
            quiet += 1
            if quiet >= SERIES_QUIET_TERMS:
                logger.debug('2F1(%s, %s; %s; %s) summed in %d terms', a, b, c, z, k + 1)
                return total
        else:
            quiet = 0
    raise ConvergenceError(
        '2F1({}, {}; {}; {}) did not converge in {} terms'.format(a, b, c, z, SERIES_BUDGET))


@functools.lru_cache(maxsize=512)
def _connection_coefficients(a, b, c):
    gc = gamma(c)
    first = gc * gamma(b - a) * rgamma(b) * rgamma(c - a)
    second = gc * gamma(a - b) * rgamma(a) * rgamma(c - b)
    return first, second


def _reciprocal_argument(a, b, c, z):
    first, second = _connection_coefficients(a, b, c)
    w = 1 / z
    value = 0j
    if first != 0:
        value += first * power(-z, -a) * _series(a, a - c + 1, a - b + 1, w)
    if second != 0:
        value += second * power(-z, -b) * _series(b, b - c + 1, b - a + 1, w)
    return value


def _large_negative(a, b, c, z):
    d = a - b
    n = round(d.real)
    if abs(d - n) >= CONNECTION_DELTA / 2:
        return _reciprocal_argument(a, b, c, z)
    # a - b sits on (or next to) an integer where the two connection terms
    # have cancelling poles; average symmetric perturbations of b and
    # extrapolate the O(delta^2) error away.
    delta = CONNECTION_DELTA
    near = _reciprocal_argument(a, b + delta, c, z) + _reciprocal_argument(a, b - delta, c, z)
    far = (_reciprocal_argument(a, b + 2 * delta, c, z) +
           _reciprocal_argument(a, b - 2 * delta, c, z))
    return (2 * near) / 3 - far / 6


def hyp2f1(args):
    """Gauss hypergeometric function 2F1(a, b; c; z) for real z <= 0.999.

    `args` is a Hyp2F1Args (a plain 4-tuple is accepted too). The parameters
    are put in a canonical order first so the result is exactly symmetric
    in (a, b).
    """
    args = Hyp2F1Args.from_values(*args)
    a, b, c, z = args
    if (b.real, b.imag) < (a.real, a.imag):
        a, b = b, a

    if z == 0:
        return 1 + 0j
    if args.terminates and abs(z) <= 1:
        return _series(a, b, c, z)
    if z >= 0:
        return _series(a, b, c, z)
    if z >= Z_PFAFF_MIN:
        return power(1 - z, -a) * _series(a, c - b, c, z / (z - 1))
    if args.terminates:
        # a polynomial in z; the Pfaff image is a polynomial too
        if nearest_nonpositive_integer(a, 0) is not None:
            return _series(a, b, c, z)
        return _series(b, a, c, z)
    return _large_negative(a, b, c, z)
