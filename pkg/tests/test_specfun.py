"""Legendre, gamma and 2F1 values against frozen mpmath references (30 digits)."""

import cmath
import math

import pytest

from legsum.errors import GammaPoleError, HypergeometricParameterError, ParameterError
from legsum.specfun import (
    conical_with_derivatives,
    du_legendre_p_conical,
    dz_legendre_p_conical,
    gamma_ln,
    hyp2f1,
    legendre_p_conical,
    legendre_p_real_degree,
    legendre_q_real_degree,
    p_general,
    q_general,
)
from legsum.types import ConicalPoint

# mpmath.legenp(-1/2 + i z, mu, cosh(eta), type=3)
P_CONICAL = [
    (0.0, 1.0, 2.0, 0.21719320780657850667),
    (-1.0, 2.0, 5.0, 0.0049422333550721591398),
    (-1.5, 0.5, 10.0, -0.0053751550363406275134),
    (-2.5, 3.0, 0.7, 0.12890565286316793147),
    (-0.3, 1.2, 30.0, -0.042028405568294723066),
    (0.4, 0.7, 3.0, -0.27947249548079161428),
]

# mpmath.legenq(x - 1/2, mu, cosh(eta), type=3)
Q_REAL = [
    (-1.5, 1.0, 2.3, 0.042443734867304443481j),
    (-1.0, 2.0, 1.5, -0.024785114858163262778),
    (0.0, 0.8, 3.1, 0.059876572853011425944),
    (-0.5, 1.3, 0.4, -1.4293845102576368055j),
]

P_REAL = [
    (-1.5, 1.0, 2.3, 0.38066383455629321447),
    (0.0, 0.8, 3.1, 3.0995174969567516569),
    (-2.5, 2.0, 7.5, 1111.3863473573001955),
]


@pytest.mark.parametrize("mu,eta,z,ref", P_CONICAL)
def test_conical_against_reference(mu, eta, z, ref):
    r = legendre_p_conical(ConicalPoint.from_eta(mu, eta), z)
    assert r.converged
    assert abs(r.value - ref) <= 1e-13 * max(1.0, abs(ref))


@pytest.mark.parametrize("mu,eta,x,ref", Q_REAL)
def test_q_real_degree_against_reference(mu, eta, x, ref):
    r = legendre_q_real_degree(ConicalPoint.from_eta(mu, eta), x)
    assert abs(complex(r.value) - ref) <= 1e-13 * max(1.0, abs(ref))


@pytest.mark.parametrize("mu,eta,x,ref", P_REAL)
def test_p_real_degree_against_reference(mu, eta, x, ref):
    r = legendre_p_real_degree(ConicalPoint.from_eta(mu, eta), x)
    assert abs(r.value - ref) <= 1e-13 * abs(ref)


@pytest.mark.parametrize("eta", [0.5, 1.0, 2.0, 4.0])
@pytest.mark.parametrize("z", [0.3, 2.0, 17.0])
def test_half_integer_orders_are_elementary(eta, z):
    pt_m = ConicalPoint.from_eta(-0.5, eta)
    pt_p = ConicalPoint.from_eta(0.5, eta)
    norm = math.sqrt(2 / (math.pi * math.sinh(eta)))
    assert legendre_p_conical(pt_m, z).value == pytest.approx(norm * math.sin(z * eta) / z, rel=1e-12, abs=1e-14)
    assert legendre_p_conical(pt_p, z).value == pytest.approx(norm * math.cos(z * eta), rel=1e-12, abs=1e-14)


def test_conical_is_even_in_z():
    pt = ConicalPoint.from_eta(-1.0, 1.3)
    assert legendre_p_conical(pt, -4.2).value == legendre_p_conical(pt, 4.2).value


def test_derivatives_match_finite_differences():
    pt = ConicalPoint.from_eta(-1.5, 1.1)
    z, h = 3.7, 1e-5
    dz = dz_legendre_p_conical(pt, z).value
    fd = (legendre_p_conical(pt, z + h).value - legendre_p_conical(pt, z - h).value) / (2 * h)
    assert dz == pytest.approx(fd, rel=1e-8)
    du = du_legendre_p_conical(pt, z).value
    up, um = ConicalPoint(pt.mu, pt.u + h, math.acosh(pt.u + h)), ConicalPoint(pt.mu, pt.u - h, math.acosh(pt.u - h))
    fd_u = (legendre_p_conical(up, z).value - legendre_p_conical(um, z).value) / (2 * h)
    assert du == pytest.approx(fd_u, rel=1e-7)
    p, dz2, du2 = conical_with_derivatives(pt, z)
    assert (dz2, du2) == pytest.approx((dz, du), rel=1e-14)


@pytest.mark.parametrize("mu", [0.0, -0.5, -1.0, -2.5])
def test_wronskian_of_p_and_q(mu):
    # W{P, Q} = e^{i mu pi} Gamma(nu + mu + 1) / (Gamma(nu - mu + 1) (1 - u^2)) at real degree nu
    eta, x = 1.4, 2.2
    nu = x - 0.5
    p, q = p_general(mu, eta, x), q_general(mu, eta, x)
    w = (p.f * q.f_eta - p.f_eta * q.f) / math.sinh(eta)
    expected = cmath.exp(1j * math.pi * mu) * math.gamma(nu + mu + 1) / math.gamma(nu - mu + 1) \
        / (1 - math.cosh(eta) ** 2)
    assert abs(w - expected) <= 1e-12 * abs(expected)


def test_point_validation():
    with pytest.raises(ParameterError):
        ConicalPoint(0.0, 0.5, 1.0)
    with pytest.raises(ParameterError):
        ConicalPoint.from_eta(0.0, -1.0)


def test_gamma_and_hypergeometric_guards():
    assert gamma_ln(5.0).value == pytest.approx(math.log(24.0), rel=1e-15)
    with pytest.raises(GammaPoleError):
        gamma_ln(-2.0)
    with pytest.raises(HypergeometricParameterError):
        hyp2f1(1.0, 1.0, -3.0, 0.2)
    # 2F1(1, 1; 2; w) = -log(1 - w)/w
    assert hyp2f1(1.0, 1.0, 2.0, 0.3).value == pytest.approx(-math.log(0.7) / 0.3, rel=1e-14)
