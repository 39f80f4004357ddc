import math

import numpy as np
import pytest
from scipy import integrate

from harmonic_kernels import kernels
from harmonic_kernels import quadrature
from harmonic_kernels.errors import DomainError
from harmonic_kernels.errors import NonConvergence
from harmonic_kernels.objects.space import SpaceDescriptor
from harmonic_kernels.quadrature import Integrand


def rel(x, y):
    return abs(x - y) / max(abs(x), abs(y))


def inverse_square(y):
    return y ** -2


def inverse_square_root_gap(y):
    return (y - 1) ** -0.5 * y ** -2


def gaussian_like(y):
    return math.exp(-y) * y ** -0.5


def steep_gap(y):
    return (y - 1) ** -0.95 * y ** -2


# (integrand, lower endpoint, singular exponent, exact value)
examples = [
    (inverse_square, 1.0, 0.0, 1.0),
    (inverse_square_root_gap, 1.0, -0.5, math.pi / 2),
    (gaussian_like, 0.0, -0.5, math.sqrt(math.pi)),
]


class TestIntegrateSemiInfinite(object):

    def test_examples(self):
        for f, lower, alpha, exact in examples:
            result = quadrature.integrate_semi_infinite(Integrand.build(f, lower, alpha), 1e-10)
            assert result.converged
            assert rel(result.value, exact) < 1e-10, (lower, alpha)
            assert 0 <= result.error_estimate <= 1e-10
            assert result.absolute_error == result.error_estimate * abs(result.value)
            assert result.evaluations > 0

    def test_never_evaluates_at_endpoint(self):
        seen = []

        def recording(y):
            seen.append(y)
            return inverse_square_root_gap(y)

        quadrature.integrate_semi_infinite(Integrand.build(recording, 1.0, -0.5), 1e-10)
        assert min(seen) > 1.0

    def test_small_exponent(self):
        # (y - 1)^{-0.95} y^{-2} = B(0.05, 1.95)
        exact = math.gamma(0.05) * math.gamma(1.95) / math.gamma(2.0)
        result = quadrature.integrate_semi_infinite(Integrand.build(steep_gap, 1.0, -0.95), 1e-9)
        assert rel(result.value, exact) < 1e-8

    def test_converged_within_tolerance(self):
        def scaled(y):
            return 100 * math.exp(-y)

        for tol in [1e-13, 1e-10, 1e-6]:
            result = quadrature.integrate_semi_infinite(Integrand.build(scaled, 0.0), tol)
            assert result.converged
            assert result.error_estimate <= tol
            assert rel(result.value, 100.0) < 10 * tol + 1e-14

    def test_refinement_does_not_increase_error(self):
        for f, lower, alpha, _ in examples:
            estimates = [quadrature.integrate_semi_infinite(
                             Integrand.build(f, lower, alpha), 1e-10, levels=levels).error_estimate
                         for levels in (1, 2, 3)]
            assert estimates[0] >= estimates[1] >= estimates[2], (lower, alpha)

    def test_fixed_levels(self):
        result = quadrature.integrate_semi_infinite(Integrand.build(inverse_square_root_gap, 1.0, -0.5),
                                                    1e-10, levels=1)
        assert not result.converged
        assert result.error_estimate > 1e-10

    def test_overflow_in_tail(self):
        # math.exp raises OverflowError past y = 709.78, where e^{-y} is negligible
        def overflowing(y):
            return 1 / math.exp(y)

        result = quadrature.integrate_semi_infinite(Integrand.build(overflowing, 0.0), 1e-8)
        assert rel(result.value, 1.0) < 1e-8

    def test_non_convergence(self):
        noise = np.random.RandomState(7)

        def noisy(y):
            return math.exp(-y) * (1 + 1e-3 * noise.uniform(-1, 1))

        with pytest.raises(NonConvergence) as err:
            quadrature.integrate_semi_infinite(Integrand.build(noisy, 0.0), 1e-12)
        assert err.value.result is not None
        assert not err.value.result.converged

    def test_validation(self):
        with pytest.raises(DomainError):
            Integrand.build(gaussian_like, 0.0, -1.0)
        with pytest.raises(DomainError):
            Integrand.build(gaussian_like, float('inf'))
        with pytest.raises(DomainError):
            quadrature.integrate_semi_infinite(Integrand.build(gaussian_like, 0.0), 1e-14)


class TestIntegrateTransform(object):

    def test_examples(self):
        result = quadrature.integrate_transform((3, 1), 2 + 0.5j, 1.0, 1e-9)
        assert rel(result.value, kernels.na_resolvent((3, 1), 2 + 0.5j, 1.0)) < 1e-6
        result = quadrature.integrate_transform((7, 3), 1.5, 0.7, 1e-9)
        assert rel(result.value, kernels.na_resolvent((7, 3), 1.5, 0.7)) < 1e-6

    def test_not_eligible(self):
        with pytest.raises(DomainError):
            quadrature.integrate_transform((4, 0), 1.0, 1.0, 1e-8)
        with pytest.raises(DomainError):
            quadrature.integrate_transform((4, 1), 1.0, 1.0, 1e-8)
        with pytest.raises(DomainError):
            quadrature.integrate_transform((3, 1), 1.0, 0.0, 1e-8)

    def test_against_scipy(self):
        space = SpaceDescriptor.from_dims(3, 1)
        evaluator = quadrature.transform_integrand(space, 1.0, 1.0)
        re = integrate.quad(lambda t: evaluator(t).real, 0, 40, limit=200, epsabs=0, epsrel=1e-11)[0]
        im = integrate.quad(lambda t: evaluator(t).imag, 0, 40, limit=200, epsabs=0, epsrel=1e-11)[0]
        result = quadrature.integrate_transform(space, 1.0, 1.0, 1e-10)
        prefactor = quadrature.transform_prefactor(space.dim_z - 1)
        assert rel(result.value / prefactor, complex(re, im)) < 1e-8

    def test_integrand_bounded_at_origin(self):
        for dims in [(3, 1), (5, 1), (7, 3), (15, 7)]:
            space = SpaceDescriptor.from_dims(*dims)
            evaluator = quadrature.transform_integrand(space, 2 + 0.5j, 1.0)
            reference = abs(evaluator(0.1))
            for t in [1e-8, 1e-4, 1e-2, 0.05]:
                assert abs(evaluator(t)) <= 10 * reference, (dims, t)

    def test_integrand_tail_decay(self):
        for dims in [(3, 1), (5, 1), (7, 3), (15, 7)]:
            space = SpaceDescriptor.from_dims(*dims)
            evaluator = quadrature.transform_integrand(space, 1.0, 1.0)
            ratio = abs(evaluator(10) / evaluator(5))
            assert ratio <= math.exp(-8), dims

    def test_bundle_transform_at_half_center(self):
        # at tau = dim_z - 1 the bundle kernel is the plain one
        space = SpaceDescriptor.from_dims(7, 3)
        plain = quadrature.integrate_transform(space, 1.5, 0.7, 1e-9)
        bundle = quadrature.integrate_bundle_transform(space, 2.0, 1.5, 0.7, 1e-9)
        assert rel(plain.value, bundle.value) < 1e-8
