"""
Exact term algebra for the operator D = (1/sinh r) d/dr.

A TermSum stores e^{i lam r} * sum c_{k,j}(i lam) csch^k(r) coth^j(r), where
every c_{k,j} is a LambdaPoly with integer coefficients in the formal
variable (i lam). Only the two rewrite rules

    d/dr csch = -csch coth,    d/dr coth = -csch^2

are needed, and coth^2 = 1 + csch^2 is never applied, so the basis stays
closed under D without normalisation.
"""
from __future__ import absolute_import, division

import cmath
import math
import threading
from collections import namedtuple

from .common import LAMBDA_MIN
from .errors import DomainError
from .errors import PoleError


class LambdaPoly(namedtuple('LambdaPoly', ['coefficients'])):
    """Polynomial in (i lam); coefficients[p] multiplies (i lam)^p."""

    __slots__ = ()

    @staticmethod
    def from_coefficients(coefficients):
        coefficients = [int(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        return LambdaPoly(tuple(coefficients))

    @staticmethod
    def monomial(coefficient, degree):
        return LambdaPoly.from_coefficients([0] * degree + [coefficient])

    @property
    def is_zero(self):
        return not self.coefficients

    def plus(self, other):
        n = max(len(self.coefficients), len(other.coefficients))
        mine = self.coefficients + (0,) * (n - len(self.coefficients))
        theirs = other.coefficients + (0,) * (n - len(other.coefficients))
        return LambdaPoly.from_coefficients([x + y for x, y in zip(mine, theirs)])

    def scaled(self, factor):
        return LambdaPoly.from_coefficients([factor * c for c in self.coefficients])

    def times_variable(self):
        if self.is_zero:
            return self
        return LambdaPoly((0,) + self.coefficients)

    def evaluate(self, x):
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value


class TermSum(object):
    """Immutable map (csch power k, coth power j) -> non-zero LambdaPoly."""

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        cleaned = {}
        for key, poly in (terms or {}).items():
            k, j = key
            if k < 0 or j < 0:
                raise DomainError('negative power in term {}'.format(key))
            if not isinstance(poly, LambdaPoly):
                poly = LambdaPoly.from_coefficients(poly)
            if not poly.is_zero:
                cleaned[(int(k), int(j))] = poly
        self._terms = cleaned

    @staticmethod
    def unit():
        """The TermSum of e^{i lam r} itself."""
        return TermSum({(0, 0): LambdaPoly((1,))})

    def items(self):
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return isinstance(other, TermSum) and self._terms == other._terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        return 'TermSum({})'.format(
            ', '.join('{}: {}'.format(k, list(p.coefficients)) for k, p in self.items()))

    def shifted(self, csch_power):
        """Multiply every term by csch^csch_power."""
        return TermSum({(k + csch_power, j): p for (k, j), p in self._terms.items()})

    def bind(self, lam):
        """Evaluate the polynomial coefficients at i lam once.

        Returns a tuple of (k, j, complex) usable by eval_bound.
        """
        x = 1j * complex(lam)
        return tuple((k, j, complex(p.evaluate(x))) for (k, j), p in self.items())


def _accumulate(target, key, poly):
    if key in target:
        target[key] = target[key].plus(poly)
    else:
        target[key] = poly


def differentiate(t):
    """Exact d/dr of a TermSum (the e^{i lam r} factor included)."""
    result = {}
    for (k, j), c in t.items():
        _accumulate(result, (k, j), c.times_variable())
        if k:
            _accumulate(result, (k, j + 1), c.scaled(-k))
        if j:
            _accumulate(result, (k + 2, j - 1), c.scaled(-j))
    return TermSum(result)


def apply_D(t):
    """(1/sinh r) d/dr applied to a TermSum."""
    return differentiate(t).shifted(1)


def eval_bound(bound, lam, r):
    if not r > 0:
        raise DomainError('r must be positive, got {}'.format(r))
    csch = 1 / math.sinh(r)
    coth = 1 / math.tanh(r)
    total = 0j
    for k, j, c in bound:
        total += c * csch ** k * coth ** j
    return cmath.exp(1j * complex(lam) * r) * total


def eval_term_sum(t, lam, r):
    return eval_bound(t.bind(lam), lam, r)


_d_powers = [TermSum.unit()]
_d_powers_lock = threading.Lock()


def d_power(m):
    """D^m applied to e^{i lam r}, computed once and cached."""
    if m < 0:
        raise DomainError('m must be non-negative, got {}'.format(m))
    if m < len(_d_powers):
        return _d_powers[m]
    with _d_powers_lock:
        while len(_d_powers) <= m:
            _d_powers.append(apply_D(_d_powers[-1]))
    return _d_powers[m]


def odd_constant(m, lam):
    """C_m(lam) = (-1)^{m+1} / (2 i lam (2 pi)^m)."""
    lam = complex(lam)
    if abs(lam) < LAMBDA_MIN:
        raise PoleError('odd resolvent constant has a pole at lambda = 0')
    return (-1) ** (m + 1) / (2j * lam * (2 * math.pi) ** m)


def odd_resolvent_kernel(m, lam):
    """Return r -> R_{2m+1}(lam, r) with coefficients bound once."""
    constant = odd_constant(m, lam)
    bound = d_power(m).bind(lam)

    def kernel(r):
        return constant * eval_bound(bound, lam, r)

    return kernel


def odd_resolvent(m, lam, r):
    """Resolvent kernel of the (2m+1)-dimensional real hyperbolic space."""
    if not r > 0:
        raise DomainError('r must be positive, got {}'.format(r))
    return odd_resolvent_kernel(m, lam)(r)
