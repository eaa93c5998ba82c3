import math

import pytest

from legsum.curvedcasimir import (
    CasimirConfig,
    FieldPoint,
    cos_gamma,
    eigenfrequency,
    mode_sum_oracle,
    phase_check,
    phi2_boundary,
    phi2_center,
    phi2_minkowski_boundary,
    reduced_q,
    wightman_boundary,
    x_m,
)
from legsum.errors import ImaginaryXm, ParameterError, ValidityViolation
from legsum.types import Flag


def test_config_validation():
    with pytest.raises(ImaginaryXm):
        CasimirConfig(xi=0.5)
    with pytest.raises(ParameterError):
        CasimirConfig(a=-1.0)
    assert CasimirConfig().as_dict()["l_max"] == 80


def test_dispersion():
    cfg = CasimirConfig(a=2.0, M=0.5, xi=0.1)
    assert x_m(cfg) ** 2 == pytest.approx(0.25 * 4 + 1 - 0.6)
    assert eigenfrequency(3.0, cfg) == pytest.approx(math.sqrt(9 + x_m(cfg) ** 2) / 2)


def test_cos_gamma():
    assert cos_gamma(FieldPoint(0.1, 0.0), FieldPoint(0.2, math.pi)) == pytest.approx(-1.0)
    assert cos_gamma(FieldPoint(0.1, 0.5, 0.0), FieldPoint(0.2, 0.5, 0.0)) == pytest.approx(1.0)


@pytest.mark.parametrize("l", [0, 1, 3, 6])
@pytest.mark.parametrize("x", [0.4, 2.5, 11.0])
def test_reduced_q_matches_generic_q(l, x):
    # the product with e^{i(l+1/2)pi} must come out real and equal to the terminating series
    assert phase_check(l, x, 0.8) < 1e-10
    assert reduced_q(l, x, 0.8) > 0


def test_center_closed_form():
    # conformal, massless: -1/(2 pi^2) int_0^inf x/(e^{2x} - 1) dx = -1/48
    v = phi2_center(CasimirConfig(xi=1 / 6))
    assert abs(v.value + 1 / 48) < 1e-10


@pytest.mark.parametrize("M", [0.0, 0.5, 1.0])
def test_conformal_center_equals_flat_space(M):
    a, r0 = 1.5, 0.8
    curved = phi2_center(CasimirConfig(a=a, M=M, xi=1 / 6, r0=r0))
    flat = phi2_minkowski_boundary(a * r0, 0.0, M)
    assert abs(curved.value - flat.value) < 1e-10


def test_phi2_tends_to_center_value():
    cfg = CasimirConfig()
    c = phi2_center(cfg).value
    gaps = [abs(phi2_boundary(cfg, r).value - c) for r in (0.1, 0.05, 0.02)]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 1e-4


def test_phi2_is_wightman_coincidence_limit():
    cfg = CasimirConfig(M=0.3)
    p = FieldPoint(0.4)
    assert wightman_boundary(cfg, p, p).value == pytest.approx(phi2_boundary(cfg, 0.4).value, rel=1e-12)


def test_dimensionless_combination_depends_on_ma_only():
    lhs = 4 * phi2_boundary(CasimirConfig(a=2.0, M=0.5), 0.3).value
    rhs = phi2_boundary(CasimirConfig(a=1.0, M=1.0), 0.3).value
    assert lhs == pytest.approx(rhs, rel=1e-12)


def test_wightman_symmetry_and_oracle():
    cfg = CasimirConfig(M=0.5, xi=0.1)
    p1, p2 = FieldPoint(0.3, theta=0.2, t=0.5), FieldPoint(0.5, theta=0.9)
    w = wightman_boundary(cfg, p1, p2, euclidean=True)
    assert wightman_boundary(cfg, p2, p1, euclidean=True).value == pytest.approx(w.value, rel=1e-13)
    oracle = mode_sum_oracle(cfg, p1, p2, 0.5)
    assert abs(w.value - oracle.value) <= 1e-9 * abs(oracle.value)


def test_wightman_with_center_point():
    cfg = CasimirConfig()
    w = wightman_boundary(cfg, FieldPoint(0.0), FieldPoint(0.0))
    assert w.value == pytest.approx(phi2_center(cfg).value, rel=1e-10)


def test_lorentzian_validity_domain():
    cfg = CasimirConfig()
    with pytest.raises(ValidityViolation):
        wightman_boundary(cfg, FieldPoint(0.5, t=1.5), FieldPoint(0.6))
    with pytest.raises(ParameterError):
        phi2_boundary(cfg, 1.0)


def test_near_boundary_flag():
    v = phi2_boundary(CasimirConfig(l_max=2), 0.99)
    assert Flag.NEAR_BOUNDARY in v.flags
    assert not v.converged


def test_result_carries_tail_bound():
    v = phi2_boundary(CasimirConfig(), 0.5)
    assert v.converged and 0 <= v.tail_bound <= v.abs_err and v.l_used >= 2
