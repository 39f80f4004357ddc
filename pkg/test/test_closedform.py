import cmath
import math

import numpy as np
import pytest
import sympy

from harmonic_kernels import closedform
from harmonic_kernels import differences
from harmonic_kernels.closedform import LambdaPoly
from harmonic_kernels.closedform import TermSum
from harmonic_kernels.errors import DomainError
from harmonic_kernels.errors import PoleError

lambdas = [1, 1.5, 2 + 0.5j, 0.3 + 1j, 3j]
radii = [0.1, 0.3, 0.5, 1.0, 2.0, 5.0]

lam_symbol = sympy.Symbol('lam')
r_symbol = sympy.Symbol('r', positive=True)


def rel(x, y):
    return abs(x - y) / max(abs(x), abs(y))


def to_sympy(t):
    """The expression a TermSum stands for, built independently in sympy."""
    x = sympy.I * lam_symbol
    total = 0
    for (k, j), poly in t.items():
        coefficient = sum(c * x ** p for p, c in enumerate(poly.coefficients))
        total += coefficient * sympy.csch(r_symbol) ** k * sympy.coth(r_symbol) ** j
    return sympy.exp(sympy.I * lam_symbol * r_symbol) * total


def sympy_value(expr, lam, r):
    values = {lam_symbol: sympy.Float(lam.real, 30) + sympy.I * sympy.Float(lam.imag, 30),
              r_symbol: sympy.Float(r, 30)}
    return complex(sympy.N(expr.subs(values), 30))


class TestLambdaPoly(object):

    def test_normalized(self):
        assert LambdaPoly.from_coefficients([1, 2, 0, 0]).coefficients == (1, 2)
        assert LambdaPoly.from_coefficients([0, 0]).is_zero
        assert LambdaPoly.monomial(-3, 2).coefficients == (0, 0, -3)

    def test_arithmetic(self):
        p = LambdaPoly.from_coefficients([1, 2])
        q = LambdaPoly.from_coefficients([-1, -2])
        assert p.plus(q).is_zero
        assert p.times_variable().coefficients == (0, 1, 2)
        assert p.scaled(3).coefficients == (3, 6)
        assert p.evaluate(2j) == 1 + 4j


class TestApplyD(object):

    def test_examples(self):
        once = closedform.apply_D(TermSum.unit())
        assert once == TermSum({(1, 0): [0, 1]})
        twice = closedform.apply_D(once)
        assert twice == TermSum({(2, 0): [0, 0, 1], (2, 1): [0, -1]})
        assert closedform.apply_D(TermSum()) == TermSum()

    def test_zero_terms_dropped(self):
        t = TermSum({(0, 0): [1], (3, 2): [0, 0]})
        assert len(t) == 1

    def test_negative_powers_rejected(self):
        with pytest.raises(DomainError):
            TermSum({(-1, 0): [1]})

    def test_against_sympy(self):
        t = TermSum.unit()
        for m in range(1, 5):
            expected = sympy.diff(to_sympy(t), r_symbol) / sympy.sinh(r_symbol)
            t = closedform.apply_D(t)
            for lam, r in [(0.7 + 0.2j, 1.3), (2.0 + 0j, 0.4)]:
                actual = sympy_value(to_sympy(t), lam, r)
                assert rel(actual, sympy_value(expected, lam, r)) < 1e-13, (m, lam, r)

    def test_powers_cached(self):
        assert closedform.d_power(3) is closedform.d_power(3)
        t = TermSum.unit()
        for _ in range(3):
            t = closedform.apply_D(t)
        assert closedform.d_power(3) == t

    def test_recurrence_is_exact(self):
        for m in range(9):
            shifted = closedform.differentiate(closedform.d_power(m)).shifted(1)
            assert shifted == closedform.d_power(m + 1)

    def test_random_sums_against_differences(self):
        noise = np.random.RandomState(11)
        for trial in range(20):
            terms = {}
            for _ in range(4):
                key = (int(noise.randint(0, 4)), int(noise.randint(0, 4)))
                terms[key] = noise.randint(-5, 6, size=int(noise.randint(1, 4)))
            terms[(0, int(noise.randint(1, 4)))] = noise.randint(1, 6, size=3)
            t = TermSum(terms)
            assert any(k == 0 and j > 0 for (k, j), _ in t.items())
            derived = closedform.apply_D(t)
            for lam in lambdas:
                r = float(noise.uniform(0.5, 2.0))

                def f(rho):
                    return closedform.eval_term_sum(t, lam, rho)

                expected = differences.derivative(f, r) / math.sinh(r)
                actual = closedform.eval_term_sum(derived, lam, r)
                scale = max(abs(expected), abs(f(r)), 1.0)
                assert abs(actual - expected) <= 1e-7 * scale, (trial, t, lam, r)


class TestEvalTermSum(object):

    def test_unit(self):
        for lam in lambdas:
            assert rel(closedform.eval_term_sum(TermSum.unit(), lam, 0.7),
                       cmath.exp(1j * lam * 0.7)) < 1e-15

    def test_examples(self):
        t = TermSum({(1, 0): [0, 1]})
        assert abs(closedform.eval_term_sum(t, 1j, 1) - (-0.3130352854)) < 1e-10
        expected = 1j * cmath.exp(1j) / math.sinh(1)
        assert rel(closedform.eval_term_sum(t, 1, 1), expected) < 1e-14

    def test_positive_radius(self):
        with pytest.raises(DomainError):
            closedform.eval_term_sum(TermSum.unit(), 1, 0)


class TestOddResolvent(object):

    def test_first_three(self):
        for lam in lambdas:
            for r in radii:
                e = cmath.exp(1j * lam * r)
                assert rel(closedform.odd_resolvent(0, lam, r), -e / (2j * lam)) < 1e-13
                assert rel(closedform.odd_resolvent(1, lam, r),
                           e / (4 * math.pi * math.sinh(r))) < 1e-13
                expected = e * (1 / math.tanh(r) - 1j * lam) / (8 * math.pi ** 2 * math.sinh(r) ** 2)
                assert rel(closedform.odd_resolvent(2, lam, r), expected) < 1e-12

    def test_constant(self):
        assert closedform.odd_constant(1, 1) == 1 / (2j * 2 * math.pi)
        for m in range(5):
            ratio = closedform.odd_constant(m + 1, 0.7) / closedform.odd_constant(m, 0.7)
            assert rel(ratio, -1 / (2 * math.pi)) < 1e-15

    def test_pole_at_zero(self):
        with pytest.raises(PoleError):
            closedform.odd_resolvent(1, 0, 1)

    def test_kernel_matches(self):
        kernel = closedform.odd_resolvent_kernel(4, 2 + 0.5j)
        assert kernel(0.8) == closedform.odd_resolvent(4, 2 + 0.5j, 0.8)
