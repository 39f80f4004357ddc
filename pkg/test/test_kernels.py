import cmath
import math

import mpmath
import pytest

from harmonic_kernels import closedform
from harmonic_kernels import kernels
from harmonic_kernels.common import STANDARD_LAMBDAS
from harmonic_kernels.common import STANDARD_RADII
from harmonic_kernels.errors import ConvergenceError
from harmonic_kernels.errors import DomainError
from harmonic_kernels.objects.space import SpaceDescriptor
from harmonic_kernels.specfun import gamma


def rel(x, y):
    return abs(x - y) / max(abs(x), abs(y))


def oracle_resolvent(dim_n, sigma, shift, lam, r, squared=False):
    """C (cosh r)^{-sigma + i lam} 2F1(s, s - shift; 1 - i lam; sech^2 r) at 30 digits."""
    with mpmath.workdps(30):
        lam = mpmath.mpc(lam.real, lam.imag)
        r = mpmath.mpf(r)
        s = (sigma - 1j * lam) / 2
        second = mpmath.gamma(s) if squared else mpmath.gamma(s - shift)
        constant = (mpmath.pi ** (-mpmath.mpf(dim_n + 1) / 2) * mpmath.gamma(s) * second /
                    (4 * mpmath.gamma(1 - 1j * lam)))
        value = (constant * mpmath.cosh(r) ** (-sigma + 1j * lam) *
                 mpmath.hyp2f1(s, s - shift, 1 - 1j * lam, mpmath.sech(r) ** 2))
        return complex(value)


class TestSpaceDescriptor(object):

    def test_derived(self):
        space = SpaceDescriptor.from_dims(7, 3)
        assert space.sigma == 5
        assert space.beta == 1
        assert space.transform_eligible
        assert space.odd_order == 5

    def test_hyperbolic(self):
        space = SpaceDescriptor.hyperbolic(5)
        assert space == (4, 0)
        assert space.beta == -0.5
        assert not space.transform_eligible

    def test_invalid(self):
        for dims in [(3, 3), (1, 2), (-1, 0), (2.5, 1)]:
            with pytest.raises(DomainError):
                SpaceDescriptor.from_dims(*dims)
        with pytest.raises(DomainError):
            SpaceDescriptor.from_dims(4, 1).odd_order


class TestHyperbolicResolvent(object):

    def test_one_dimensional(self):
        for lam in STANDARD_LAMBDAS:
            for r in STANDARD_RADII:
                expected = -cmath.exp(1j * lam * r) / (2j * lam)
                assert rel(kernels.hyperbolic_resolvent(1, lam, r), expected) < 1e-10, (lam, r)
                assert rel(kernels.hyperbolic_resolvent_half(1, lam, r), expected) < 1e-10, (lam, r)

    def test_odd_closed_forms(self):
        for m in range(1, 6):
            for lam in STANDARD_LAMBDAS:
                for r in STANDARD_RADII:
                    actual = kernels.hyperbolic_resolvent(2 * m + 1, lam, r)
                    expected = closedform.odd_resolvent(m, lam, r)
                    assert rel(actual, expected) < 1e-9, (m, lam, r)

    def test_three_dimensional(self):
        lam, r = 2 + 0.5j, 1.0
        expected = cmath.exp(1j * lam * r) / (4 * math.pi * math.sinh(r))
        assert rel(kernels.hyperbolic_resolvent(3, lam, r), expected) < 1e-9

    def test_half_argument_form(self):
        for n in [2, 3, 4, 6]:
            for lam in STANDARD_LAMBDAS:
                for r in STANDARD_RADII:
                    full = kernels.hyperbolic_resolvent(n, lam, r)
                    half = kernels.hyperbolic_resolvent_half(n, lam, r)
                    assert rel(full, half) < 1e-8, (n, lam, r)

    def test_examples(self):
        assert rel(kernels.hyperbolic_resolvent_half(3, 2 + 1j, 1),
                   kernels.hyperbolic_resolvent(3, 2 + 1j, 1)) < 1e-10
        assert rel(kernels.hyperbolic_resolvent_half(5, 1, 0.7),
                   closedform.odd_resolvent(2, 1, 0.7)) < 1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            kernels.hyperbolic_resolvent(3, 1, 0.01)
        with pytest.raises(DomainError):
            kernels.hyperbolic_resolvent(0, 1, 1)
        with pytest.raises(DomainError):
            kernels.hyperbolic_resolvent(3, 1 - 0.5j, 1)
        with pytest.raises(DomainError):
            kernels.hyperbolic_resolvent(3, 0, 1)


class TestSphericalFunction(object):

    def test_origin(self):
        for n in [2, 3, 7]:
            assert kernels.spherical_function(n, 1.5 + 0.5j, 0) == 1

    def test_even_in_lambda(self):
        for lam in [1.5, 2 + 0.5j, 0.3 + 1j]:
            assert kernels.spherical_function(4, lam, 1.2) == kernels.spherical_function(4, -lam, 1.2)

    def test_three_dimensional(self):
        assert abs(kernels.spherical_function(3, 2, 1) - 0.3868688) < 1e-6
        for lam in [1.5, 2 + 0.5j]:
            for r in [0.3, 1.0, 2.0, 4.0]:
                expected = cmath.sin(lam * r) / (lam * math.sinh(r))
                assert rel(kernels.spherical_function(3, lam, r), expected) < 1e-9, (lam, r)

    def test_polynomial_case(self):
        # n = 3, lam = 3i terminates: 1 + (4/3) sinh^2 r
        for r in [0.5, 2.0, 5.0]:
            expected = 1 + 4 * math.sinh(r) ** 2 / 3
            assert rel(kernels.spherical_function(3, 3j, r), expected) < 1e-12, r

    def test_limits(self):
        with pytest.raises(ConvergenceError):
            kernels.spherical_function(3, 1, 13)
        with pytest.raises(DomainError):
            kernels.spherical_function(1, 1, 1)
        with pytest.raises(DomainError):
            kernels.spherical_function(3, 1, -0.5)


class TestNAResolvent(object):

    def test_hyperbolic_reduction(self):
        for n in range(2, 9):
            for lam in STANDARD_LAMBDAS:
                for r in STANDARD_RADII:
                    actual = kernels.na_resolvent((n - 1, 0), lam, r)
                    assert rel(actual, kernels.hyperbolic_resolvent(n, lam, r)) < 1e-12, (n, lam, r)

    def test_against_oracle(self):
        space = SpaceDescriptor.from_dims(3, 1)
        lam = 2 + 0.5j
        expected = oracle_resolvent(3, space.sigma, space.beta, lam, 1.0)
        assert rel(kernels.na_resolvent(space, lam, 1.0), expected) < 1e-10

        space = SpaceDescriptor.from_dims(7, 3)
        expected = oracle_resolvent(7, space.sigma, space.beta, 1 + 0j, 0.5)
        assert rel(kernels.na_resolvent(space, 1, 0.5), expected) < 1e-10

    def test_green_normalization(self):
        for lam in STANDARD_LAMBDAS:
            g = kernels.green_normalization((3, 1), lam)
            assert rel(g, 1 / (4 * math.pi ** 2)) < 1e-12, lam
            g = kernels.green_normalization((7, 3), lam)
            assert rel(g, 2 / (4 * math.pi ** 4)) < 1e-12, lam

    def test_leading_singularity(self):
        # R ~ g r^{-2} as r -> 0 for (3, 1)
        g = kernels.green_normalization((3, 1), 1.5)
        r = 0.05
        assert rel(kernels.na_resolvent((3, 1), 1.5, r) * r ** 2, g) < 0.1


class TestBundleResolvent(object):

    def test_tau_constant_reduces_to_na(self):
        for dims in [(3, 1), (7, 3), (15, 7)]:
            space = SpaceDescriptor.from_dims(*dims)
            for lam in STANDARD_LAMBDAS:
                for r in [0.3, 1.0, 2.0]:
                    bundle = kernels.bundle_resolvent(space, 2 * space.beta, lam, r, 'tau')
                    assert rel(bundle, kernels.na_resolvent(space, lam, r)) < 1e-14

    def test_squared_constant_ratio(self):
        space = SpaceDescriptor.from_dims(7, 3)
        for tau in [1.0, 2.0, 3.5]:
            for lam in [1.5, 2 + 0.5j, 3j]:
                squared = kernels.bundle_resolvent(space, tau, lam, 0.8, 'squared')
                fitted = kernels.bundle_resolvent(space, tau, lam, 0.8, 'tau')
                s = (space.sigma - 1j * lam) / 2
                assert rel(squared / fitted, gamma(s) / gamma(s - tau / 2)) < 1e-12

    def test_against_oracle(self):
        space = SpaceDescriptor.from_dims(3, 1)
        expected = oracle_resolvent(3, space.sigma, 0.0, 2j, 1.0, squared=True)
        assert rel(kernels.bundle_resolvent(space, 0, 2j, 1.0), expected) < 1e-10

        space = SpaceDescriptor.from_dims(7, 3)
        expected = oracle_resolvent(7, space.sigma, 1.0, 1.5 + 0j, 0.8, squared=True)
        assert rel(kernels.bundle_resolvent(space, 2, 1.5, 0.8), expected) < 1e-10

    def test_unknown_constant(self):
        with pytest.raises(DomainError):
            kernels.bundle_resolvent((7, 3), 2, 1.5, 0.8, 'other')
        with pytest.raises(DomainError):
            kernels.bundle_resolvent((7, 3), -1, 1.5, 0.8)

    def test_green_normalization(self):
        tau_form = kernels.green_normalization((7, 3), 1.5, tau=2)
        assert rel(tau_form, kernels.green_normalization((7, 3), 1.5)) < 1e-14
        with pytest.raises(DomainError):
            kernels.green_normalization((3, 1), 1.5, tau=2)


class TestTransformKernel(object):

    def test_example(self):
        expected = 2 / math.sqrt(math.cosh(2) ** 2 - math.cosh(1) ** 2)
        value = kernels.transform_kernel((3, 1), 1, 2)
        assert rel(value, expected) < 1e-14
        assert abs(value - 0.582889) < 2e-6

    def test_two_dimensional_center(self):
        for r, rho in [(0.5, 0.7), (1, 3), (2, 2.001)]:
            assert rel(kernels.transform_kernel((4, 2), r, rho), 2 * math.pi / math.cosh(r)) < 1e-14

    def test_positive_and_decreasing(self):
        for dims in [(3, 1), (4, 2)]:
            values = [kernels.transform_kernel(dims, 1, rho) for rho in [1.001, 1.1, 1.5, 2, 4]]
            assert all(v > 0 for v in values)
            assert all(a >= b for a, b in zip(values, values[1:]))
        assert kernels.transform_kernel((7, 3), 1, 1.5) > 0

    def test_endpoint_divergence(self):
        near = kernels.transform_kernel((3, 1), 1, 1 + 1e-8)
        nearer = kernels.transform_kernel((3, 1), 1, 1 + 1e-10)
        assert rel(nearer / near, 10) < 1e-3

    def test_domain(self):
        with pytest.raises(DomainError):
            kernels.transform_kernel((3, 1), 2, 2)
        with pytest.raises(DomainError):
            kernels.transform_kernel((4, 0), 1, 2)
        with pytest.raises(DomainError):
            kernels.transform_kernel((4, 1), 1, 2)


class TestJacobiODE(object):

    def test_examples(self):
        odd = closedform.odd_resolvent_kernel(1, 1)
        assert kernels.jacobi_ode_residual(odd, 2, 0, 1, 1.0) < 1e-4

        def spherical(r):
            return kernels.spherical_function(3, 2, r)

        assert kernels.jacobi_ode_residual(spherical, 2, 0, 2, 0.8) < 1e-4

        def constant(r):
            return 1.0

        assert kernels.jacobi_ode_residual(constant, 2, 0, 1j, 1.0) < 1e-10

    def test_na_resolvent(self):
        for dims in [(3, 1), (7, 3)]:
            for lam in STANDARD_LAMBDAS:
                for r in [0.3, 0.5, 1.0, 2.0]:
                    def evaluator(rho):
                        return kernels.na_resolvent(dims, lam, rho)
                    residual = kernels.jacobi_ode_residual(evaluator, dims[0], dims[1], lam, r)
                    assert residual < 1e-4, (dims, lam, r)

    def test_odd_resolvent(self):
        for m in [1, 2, 3]:
            for lam in [1, 2 + 0.5j]:
                evaluator = closedform.odd_resolvent_kernel(m, lam)
                for r in [0.5, 1.0, 2.0]:
                    residual = kernels.jacobi_ode_residual(evaluator, 2 * m, 0, lam, r)
                    assert residual < 1e-4, (m, lam, r)

    def test_wrong_equation_is_detected(self):
        def evaluator(rho):
            return kernels.na_resolvent((7, 3), 1.5, rho)

        assert kernels.jacobi_ode_residual(evaluator, 3, 1, 1.5, 1.0) > 1e-2

    def test_stencil(self):
        with pytest.raises(DomainError):
            kernels.jacobi_ode_residual(lambda r: 1.0, 2, 0, 1, 0.001, h=0.01)
