from __future__ import absolute_import, division

import math
from collections import namedtuple

from ..common import LAMBDA_MIN
from ..errors import DomainError

# Im lam >= 0 is checked with this much slack for values produced by
# arithmetic on real lambdas.
IMAG_SLACK = 1e-15


class SpaceDescriptor(namedtuple('SpaceDescriptor', ['dim_n', 'dim_z'])):
    """A harmonic NA space given by dim N (center included) and dim Z.

    dim_z = 0 is the formal real hyperbolic case H^{dim_n + 1}.
    """

    __slots__ = ()

    @staticmethod
    def from_dims(dim_n, dim_z):
        if int(dim_n) != dim_n or int(dim_z) != dim_z:
            raise DomainError('dimensions must be integers, got ({}, {})'.format(dim_n, dim_z))
        space = SpaceDescriptor(int(dim_n), int(dim_z))
        if space.dim_n < 0 or space.dim_z < 0:
            raise DomainError('dimensions must be non-negative, got {}'.format(space))
        if space.dim_z >= 1 and space.dim_n <= space.dim_z:
            raise DomainError('dim_n must exceed dim_z, got {}'.format(space))
        return space

    @staticmethod
    def hyperbolic(n):
        """The formal descriptor of H^n."""
        if n < 1:
            raise DomainError('hyperbolic dimension must be >= 1, got {}'.format(n))
        return SpaceDescriptor.from_dims(n - 1, 0)

    @property
    def sigma(self):
        return (self.dim_n + self.dim_z) / 2

    @property
    def beta(self):
        return (self.dim_z - 1) / 2

    @property
    def transform_eligible(self):
        return self.dim_z >= 1 and (self.dim_n + self.dim_z) % 2 == 0

    @property
    def odd_order(self):
        """m with dim Y = 2m + 1 for the transform target Y = H^{2 sigma + 1}."""
        if not self.transform_eligible:
            raise DomainError('{} is not transform-eligible'.format(self))
        return (self.dim_n + self.dim_z) // 2


class SpectralParam(namedtuple('SpectralParam', ['value'])):

    __slots__ = ()

    @staticmethod
    def from_value(lam):
        if isinstance(lam, SpectralParam):
            return lam
        lam = complex(lam)
        if not (math.isfinite(lam.real) and math.isfinite(lam.imag)):
            raise DomainError('lambda must be finite, got {}'.format(lam))
        if lam.imag < -IMAG_SLACK:
            raise DomainError('lambda must satisfy Im lambda >= 0, got {}'.format(lam))
        if abs(lam) < LAMBDA_MIN:
            raise DomainError('|lambda| must be at least {}, got {}'.format(LAMBDA_MIN, lam))
        return SpectralParam(lam)


class BundleParam(namedtuple('BundleParam', ['tau'])):

    __slots__ = ()

    @staticmethod
    def from_value(tau):
        if isinstance(tau, BundleParam):
            return tau
        tau = float(tau)
        if not math.isfinite(tau) or tau < 0:
            raise DomainError('tau must be finite and non-negative, got {}'.format(tau))
        return BundleParam(tau)
