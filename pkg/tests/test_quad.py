import math

import pytest

from legsum.accel import partial_sum_limit, richardson
from legsum.errors import NonFiniteIntegrand, PoleOrderMismatch
from legsum.quad import Integrand, integrate, integrate_pv, integrate_semiinfinite, integrate_sqrt_lower
from legsum.types import Flag


def test_finite_interval():
    r = integrate(math.sin, 0.0, math.pi)
    assert r.value == pytest.approx(2.0, abs=1e-13)
    assert Flag.CONVERGED in r.flags


def test_exponential_tail_with_declared_rate():
    r = integrate_semiinfinite(Integrand(lambda x: math.exp(-2 * x) * math.cos(x), decay_rate=2.0), 0.0)
    assert r.value == pytest.approx(2 / 5, abs=1e-10)


def test_exponential_tail_detected():
    r = integrate_semiinfinite(lambda x: x * math.exp(-x), 0.0)
    assert r.value == pytest.approx(1.0, abs=1e-10)


def test_algebraic_tail():
    r = integrate_semiinfinite(Integrand(lambda x: 1 / (1 + x * x), decay_power=2.0), 0.0)
    assert r.value == pytest.approx(math.pi / 2, abs=1e-10)


def test_oscillatory_panels():
    f = Integrand(lambda x: math.cos(5 * x) * math.exp(-x), decay_rate=1.0, max_panel=math.pi / 5)
    assert integrate_semiinfinite(f, 0.0).value == pytest.approx(1 / 26, abs=1e-10)


def test_principal_value():
    assert integrate_pv(lambda x: 1 / (x - 1), 1.0, 0.0, 2.0).value == pytest.approx(0.0, abs=1e-10)
    # p.v. int_0^inf e^{-x}/(x - 1) dx = -Ei(1)/e
    ei1 = 1.8951178163559367
    r = integrate_pv(Integrand(lambda x: math.exp(-x) / (x - 1), decay_rate=1.0), 1.0, 0.0, math.inf)
    assert r.value == pytest.approx(-ei1 / math.e, abs=1e-8)


def test_double_pole_is_rejected():
    with pytest.raises(PoleOrderMismatch):
        integrate_pv(lambda x: 1 / (x - 1) ** 2, 1.0, 0.0, 2.0)


def test_sqrt_endpoint_substitution():
    # int_1^inf e^{-x} / sqrt(x^2 - 1) dx = K_0(1)
    r = integrate_sqrt_lower(Integrand(lambda x: math.exp(-x), decay_rate=1.0), 1.0)
    assert r.value == pytest.approx(0.42102443824070834, abs=1e-10)
    part = integrate_sqrt_lower(lambda x: 1.0, 1.0, upper=2.0)
    assert part.value == pytest.approx(math.acosh(2.0), abs=1e-12)


def test_nonfinite_integrand_raises():
    with pytest.raises(NonFiniteIntegrand):
        integrate(lambda x: math.inf, 0.0, 1.0)


def test_richardson_and_partial_sums():
    # trapezoid-like error c h^2 + d h^4
    vals = [1.0 + 0.3 * h**2 + 0.1 * h**4 for h in (0.4, 0.2, 0.1)]
    assert richardson(vals, 2.0, [2, 4]).value == pytest.approx(1.0, abs=1e-14)
    # sum_{k>=1} 1/k^2 with 1/N tails
    r = partial_sum_limit(lambda n: math.fsum(1 / k**2 for k in range(1, n + 1)), 32)
    assert r.value == pytest.approx(math.pi**2 / 6, abs=1e-10)
