"""Abel-Plana and Bessel-zero reductions."""

import cmath
import math

import pytest
from scipy import special as sp

from legsum.errors import GrowthViolation, MissingPoleData, ParameterError
from legsum.specfun import p_general
from legsum.sumengine.special import (
    SimplePole,
    abel_plana,
    bessel_zeros,
    rayleigh_check,
    sum_bessel_zeros,
)


def _rational_poles(a):
    return [SimplePole(1j * a, -0.5j / a), SimplePole(-1j * a, 0.5j / a)]


def test_integer_abel_plana_closed_form():
    # sum_{k>=1} 1/(k^2 + 1) = (pi coth(pi) - 1)/2
    r = abel_plana("integer", lambda z: 1 / (z * z + 1), decay_power=2, imag_poles=_rational_poles(1.0))
    exact = (math.pi / math.tanh(math.pi) - 1) / 2
    assert abs(r.value - exact) < 1e-10 and r.passed
    assert r.components["origin"] == pytest.approx(-0.5)


def test_half_integer_abel_plana_closed_form():
    # sum_{k>=0} 1/((k+1/2)^2 + 1) = (pi/2) tanh(pi)
    r = abel_plana("half_integer", lambda z: 1 / (z * z + 1), decay_power=2, imag_poles=_rational_poles(1.0))
    assert abs(r.value - math.pi / 2 * math.tanh(math.pi)) < 1e-10 and r.passed


def test_abel_plana_exponential():
    # sum_{k>=1} e^{-k} = 1/(e - 1)
    r = abel_plana("integer", lambda z: cmath.exp(-z), decay_rate=1.0)
    assert abs(r.value - 1 / (math.e - 1)) < 1e-10


def test_abel_plana_rejects_fast_growth():
    with pytest.raises(GrowthViolation):
        abel_plana("integer", lambda z: cmath.cos(7 * z) / (z * z + 1), decay_power=2)


def test_bessel_zeros():
    assert bessel_zeros(0.0, 5) == pytest.approx(list(sp.jn_zeros(0, 5)), abs=1e-13)
    assert bessel_zeros(1.0, 5) == pytest.approx(list(sp.jn_zeros(1, 5)), abs=1e-13)
    assert bessel_zeros(0.5, 4) == pytest.approx([math.pi * k for k in range(1, 5)], abs=1e-14)
    with pytest.raises(ParameterError):
        bessel_zeros(-1.5, 3)


@pytest.mark.parametrize("mu", [0.0, 1.0])
@pytest.mark.parametrize("eta", [1.0, 2.4])
def test_legendre_to_bessel_limit(mu, eta):
    errs = [abs(nu**mu * p_general(-mu, eta / nu, 1j * nu).f.real - sp.jv(mu, eta)) for nu in (10, 20, 40, 80)]
    assert all(b < a for a, b in zip(errs, errs[1:]))
    # error falls like nu^-2
    assert errs[-2] / errs[-1] == pytest.approx(4.0, rel=0.05)


def _sinc_power(n, beta):
    def f(z):
        w = beta * complex(z)
        return (1 - w * w / 6 if abs(w) < 1e-4 else cmath.sin(w) / w) ** n
    return f


@pytest.mark.parametrize("mu", [-0.5, 0.0, 0.3, 1.0])
def test_bessel_sum_even_function(mu):
    v = sum_bessel_zeros(_sinc_power(8, 0.2), mu, decay_power=8, period=math.pi / 0.2, growth=1.6)
    assert v.passed and v.residual < 1e-9


def test_bessel_sum_rejects_poles_on_imaginary_axis():
    c = 0.8
    poles = [SimplePole(1j * c, 1 / (2j * c)), SimplePole(-1j * c, -1 / (2j * c))]
    with pytest.raises(MissingPoleData):
        sum_bessel_zeros(lambda z: 1 / (complex(z) ** 2 + c * c), 0.3, pole_data=poles, decay_power=2)


def test_bessel_sum_growth_guard():
    with pytest.raises(GrowthViolation):
        sum_bessel_zeros(_sinc_power(8, 0.3), 0.0, decay_power=8, growth=2.4)


@pytest.mark.parametrize("mu", [0.0, 0.5, 1.0, 2.5])
def test_rayleigh_sum(mu):
    assert abs(rayleigh_check(mu).value - 1 / (4 * (mu + 1))) < 1e-8
