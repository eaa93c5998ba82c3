import math

import pytest

from legsum.errors import ParameterError
from legsum.sumengine import (
    CATALOG,
    BesselProduct,
    ExpDecay,
    OddRational,
    RationalCos,
    SeriesOfP,
    admissibility_check,
    lhs_sum,
    t_factor,
    t_factor_wronskian,
    verify_sum,
)
from legsum.sumengine.special import (
    SimplePole,
    abel_plana,
    example1_closed_form,
    half_integer_phase,
    verify_sum_half_integer,
)
from legsum.types import ConicalPoint
from legsum.zerofind import find_zeros


def test_catalog_ids():
    assert set(CATALOG) == {"exp_decay", "user_series_of_P", "rational_cos", "bessel_product", "odd_rational"}
    for cls in CATALOG.values():
        assert cls.catalog_id in CATALOG


@pytest.mark.parametrize("mu,eta", [(-0.5, 1.0), (-1.0, 1.5), (-1.5, 2.0), (-0.3, 0.8)])
def test_t_factor_forms_agree(mu, eta):
    pt = ConicalPoint.from_eta(mu, eta)
    for z in find_zeros(pt, 5).values:
        a, b = t_factor(pt, z).value, t_factor_wronskian(pt, z)
        assert abs(a - b) <= 1e-10 * abs(b)


def test_reduction_to_integer_abel_plana():
    # at mu = -1/2 each engine component times 2 i eta / pi is the matching Abel-Plana term
    eta, c = 1.3, 0.7
    pt = ConicalPoint.from_eta(-0.5, eta)
    v = verify_sum(RationalCos(alpha=0.0, c=c, m=0, n=0, eta_ref=eta), pt)
    s = math.pi / eta
    y = c / s
    res = 1 / (2j * s * s * y)
    ap = abel_plana("integer", lambda z: 1 / ((s * z) ** 2 + c * c), decay_power=2,
                    imag_poles=[SimplePole(1j * y, res), SimplePole(-1j * y, -res)])
    k = 2j * eta / math.pi
    assert abs(ap.components["integral"] - k * v.rhs_main) < 1e-10
    poles = ap.components["origin"] + ap.components["imag_poles"]
    assert abs(poles - k * (v.rhs_residues + v.rhs_imag_poles)) < 1e-10
    assert abs(ap.direct.value - k * v.lhs) <= abs(k) * v.tail_bound


def test_identity_kernel_sums_to_zero():
    pt = ConicalPoint.from_eta(-1.0, 1.2)
    v = verify_sum(SeriesOfP(pt=pt, beta=4.0, gamma=0.5), pt)
    assert abs(v.lhs) < 1e-12
    assert abs(v.rhs_total) < 1e-8
    assert v.passed


def test_exp_decay_with_real_axis_pole():
    pt = ConicalPoint.from_eta(-1.0, 1.0)
    v = verify_sum(ExpDecay(beta=4.0, gamma=0.5, pole_list=(2.0 + 0.5j,), eta_ref=1.0), pt)
    assert v.residual < 1e-8


def test_admissibility_warnings():
    pt = ConicalPoint.from_eta(-0.5, 1.0)
    tf = RationalCos(alpha=1.0, c=1.0, m=1, n=0, eta_ref=1.0)
    assert admissibility_check(tf, pt).warnings == []
    tf.c_growth = 3.0
    rep = admissibility_check(tf, pt)
    assert not rep.admissible or rep.warnings
    assert any("c < 2" in w for w in rep.warnings)


def test_lhs_tail_bound_is_reported():
    pt = ConicalPoint.from_eta(-1.0, 1.0)
    lhs, tail, k = lhs_sum(OddRational(c=1.0, m=2, eta_ref=1.0), pt)
    assert k > 0 and tail < 1e-9


def test_half_integer_phase():
    assert half_integer_phase(1, 0) == 1j
    assert half_integer_phase(1, 1) == -1j
    assert half_integer_phase(0, 2) == 1
    with pytest.raises(ParameterError):
        half_integer_phase(2, 0)


def test_half_integer_forms():
    pt = ConicalPoint.from_eta(-1.0, 1.0)
    v = verify_sum_half_integer(0, 1, OddRational(c=1.0, m=2, eta_ref=1.0), pt)
    assert v.passed and v.warnings == [] and v.residual < 1e-9
    with pytest.raises(ParameterError):
        verify_sum_half_integer(1, 0, OddRational(), pt)  # mu does not match (delta, l)


@pytest.mark.parametrize("l,m,n,alpha,c,eta", [(0, 2, 1, 1.0, 1.0, 1.5), (1, 2, 0, 2.0, 0.8, 2.0)])
def test_rational_cosine_closed_form(l, m, n, alpha, c, eta):
    pt = ConicalPoint.from_eta(-l - 0.5, eta)
    tf = RationalCos(alpha=alpha, c=c, m=m, n=n, eta_ref=eta)
    v = verify_sum_half_integer(1, l, tf, pt)
    closed = example1_closed_form(l, m, n, alpha, c, eta)
    assert abs(-v.lhs - closed.value) < 1e-9


def test_literal_closed_form_misses_axis_poles_for_l_ge_1():
    closed = example1_closed_form(1, 2, 0, 2.0, 0.8, 2.0)
    assert abs(closed.axis_poles) > 1.0
    assert abs(example1_closed_form(0, 2, 1, 1.0, 1.0, 1.5).axis_poles) < 1e-10


def test_bessel_product_parameters():
    with pytest.raises(ParameterError):
        BesselProduct(a=-1.0)
    tf = BesselProduct(a=1.0, b=1.5, eta_ref=1.0)
    assert tf.c_growth == pytest.approx(2.5)
