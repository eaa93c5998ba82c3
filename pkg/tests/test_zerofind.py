import math

import pytest

from legsum.errors import UnsupportedOrder
from legsum.specfun import legendre_p_conical
from legsum.types import ConicalPoint
from legsum.zerofind import ZeroMethod, certify, find_zeros, zero_estimate

# independent mpmath root finding on legenp(-1/2 + i z, mu, cosh eta, type=3)
REFERENCE_ZEROS = {
    (-1.5, 2.0): [2.1295557207208523505, 3.7935317626725251858, 5.4029459101685220952, 6.994972778868106618],
    (0.0, 1.0): [2.4213801477074285669, 5.5271885310397994691, 8.6582552210895322342, 11.794855089243931361],
    (-1.0, 1.0): [3.800994341364244496, 6.9988416848181957997, 10.161925361782395094, 13.314879616823119674],
}


@pytest.mark.parametrize("key", list(REFERENCE_ZEROS))
def test_zeros_match_reference(key):
    zs = find_zeros(ConicalPoint.from_eta(*key), 4)
    assert zs.method is ZeroMethod.BRACKETED_REFINED
    for got, ref in zip(zs.values, REFERENCE_ZEROS[key]):
        assert abs(got - ref) <= 1e-12


def test_closed_form_orders():
    eta = 1.3
    minus = find_zeros(ConicalPoint.from_eta(-0.5, eta), 5)
    plus = find_zeros(ConicalPoint.from_eta(0.5, eta), 5)
    assert minus.method is ZeroMethod.CLOSED_FORM
    assert minus.values == pytest.approx([math.pi * k / eta for k in range(1, 6)], abs=1e-13)
    assert plus.values == pytest.approx([math.pi * (k + 0.5) / eta for k in range(5)], abs=1e-13)


def test_zero_table_is_monotone_with_small_residuals():
    pt = ConicalPoint.from_eta(-1.5, 2.0)
    zs = find_zeros(pt, 50)
    vals = zs.values
    assert len(vals) == 50
    assert all(a < b for a, b in zip(vals, vals[1:]))
    for z in zs:
        lo, hi = z.bracket
        assert lo <= z.z <= hi
        assert abs(legendre_p_conical(pt, z.z).value) <= 1e-12


def test_asymptotic_deviation_follows_first_correction():
    # z_k eta - (pi k - pi mu/2 - pi/4) ~ -(4 mu^2 - 1) coth(eta) / (8 z_k)
    for mu, eta in [(-1.5, 2.0), (-2.5, 1.0), (0.0, 1.0)]:
        z = find_zeros(ConicalPoint.from_eta(mu, eta), 50).values[-1]
        dev = z * eta - (50 * math.pi - math.pi * mu / 2 - math.pi / 4)
        pred = -(4 * mu * mu - 1) / (math.tanh(eta) * 8 * z)
        assert abs(dev - pred) <= 0.05 * abs(pred) + 1e-4


def test_estimate_is_close_for_large_k():
    pt = ConicalPoint.from_eta(-1.0, 1.0)
    z = find_zeros(pt, 30).values[-1]
    assert abs(zero_estimate(pt, 30) - z) < 0.05


def test_positive_order_other_than_half_is_rejected():
    with pytest.raises(UnsupportedOrder):
        find_zeros(ConicalPoint.from_eta(0.3, 1.0), 5)


def test_norm_identity_certifies_zeros():
    rep = certify(find_zeros(ConicalPoint.from_eta(-1.0, 1.5), 3))
    assert rep.ok and all(e["rel_diff"] < 1e-6 for e in rep.entries)
