"""The ten acceptance criteria, each at its stated tolerance and time budget.

Every test records one pass/fail line; the lines are repeated in the
terminal summary under "acceptance criteria".
"""

import cmath
import math
import time

from scipy import special as sp

from legsum.curvedcasimir import (
    CasimirConfig,
    FieldPoint,
    curvature_limit,
    phi2_center,
    phi2_minkowski_boundary,
    static_mode_sum_oracle,
    wightman_boundary,
)
from legsum.specfun import p_general
from legsum.sumengine import (
    BesselProduct,
    OddRational,
    RationalCos,
    SeriesOfP,
    t_factor,
    t_factor_wronskian,
    verify_sum,
)
from legsum.sumengine.special import (
    SimplePole,
    abel_plana,
    rayleigh_check,
    sum_bessel_zeros,
    verify_sum_half_integer,
)
from legsum.types import ConicalPoint
from legsum.zerofind import certify, find_zeros


def test_1_closed_form_zeros(record_criterion):
    t0 = time.perf_counter()
    worst = 0.0
    for eta in (0.5, 1.0, 2.0):
        minus = find_zeros(ConicalPoint.from_eta(-0.5, eta), 20).values
        plus = find_zeros(ConicalPoint.from_eta(0.5, eta), 20).values
        worst = max(worst, *(abs(z - math.pi * k / eta) for k, z in enumerate(minus, 1)))
        worst = max(worst, *(abs(z - math.pi * (k + 0.5) / eta) for k, z in enumerate(plus)))
    dt = time.perf_counter() - t0
    ok = worst <= 1e-12 and dt < 1
    record_criterion(1, ok, f"max |z_k - closed form| = {worst:.2e}, {dt:.2f} s")
    assert ok


def test_2_asymptotic_zeros(record_criterion):
    t0 = time.perf_counter()
    devs = {}
    for mu in (0.0, -1.0, -1.5, -2.5):
        for eta in (1.0, 2.0):
            z = find_zeros(ConicalPoint.from_eta(mu, eta), 50).values[49]
            devs[(mu, eta)] = abs(z * eta - (50 * math.pi - math.pi * mu / 2 - math.pi / 4))
    dt = time.perf_counter() - t0
    bad = {k: round(v, 4) for k, v in devs.items() if v > 1e-2}
    ok = not bad and dt < 10
    record_criterion(2, ok, f"deviation at k = 50 above 1e-2 for {bad or 'none'}, {dt:.2f} s")
    assert ok


def test_3_summation_identity(record_criterion):
    t0 = time.perf_counter()
    pt_a = ConicalPoint.from_eta(-0.5, 1.5)
    pt_b = ConicalPoint.from_eta(-1.5, 2.0)
    pt_s = ConicalPoint.from_eta(-1.0, 1.2)
    pt_o = ConicalPoint.from_eta(-1.0, 1.0)
    cases = {
        "rational_cos l=0 m=2 n=1": lambda: verify_sum_half_integer(
            1, 0, RationalCos(alpha=1.0, c=1.0, m=2, n=1, eta_ref=1.5), pt_a),
        "rational_cos l=1 m=2 n=0": lambda: verify_sum_half_integer(
            1, 1, RationalCos(alpha=2.0, c=0.8, m=2, n=0, eta_ref=2.0), pt_b),
        "bessel_product l=0": lambda: verify_sum_half_integer(
            1, 0, BesselProduct(a=1.0, b=1.0, c=1.0, nu=1.0, alpha=1.0, n=0, eta_ref=1.5), pt_a),
        "bessel_product l=1": lambda: verify_sum_half_integer(
            1, 1, BesselProduct(a=0.8, b=1.2, c=0.5, nu=2.0, alpha=2.0, n=1, eta_ref=2.0), pt_b),
        "identity kernel": lambda: verify_sum(SeriesOfP(pt=pt_s, beta=4.0, gamma=0.5), pt_s),
        "imaginary poles": lambda: verify_sum_half_integer(0, 1, OddRational(c=1.0, m=2, eta_ref=1.0), pt_o),
    }
    residuals = {name: make().residual for name, make in cases.items()}
    dt = time.perf_counter() - t0
    worst = max(residuals.values())
    ok = worst <= 1e-8 and dt < 120
    record_criterion(3, ok, f"{len(cases)} instances, max residual {worst:.2e}, {dt:.1f} s")
    assert ok


def test_4_abel_plana(record_criterion):
    t0 = time.perf_counter()
    F = lambda z: 1 / (z * z + 1)
    poles = [SimplePole(1j, -0.5j), SimplePole(-1j, 0.5j)]
    r1 = abel_plana("integer", F, decay_power=2, imag_poles=poles)
    r2 = abel_plana("half_integer", F, decay_power=2, imag_poles=poles)
    dt = time.perf_counter() - t0
    ok = r1.residual <= 1e-10 and r2.residual <= 1e-10 and dt < 5
    record_criterion(4, ok, f"residuals {r1.residual:.1e} (integer), {r2.residual:.1e} (half-integer), {dt:.2f} s")
    assert ok


def _sinc8(z):
    w = 0.2 * complex(z)
    return (1 - w * w / 6 if abs(w) < 1e-4 else cmath.sin(w) / w) ** 8


def test_5_bessel_limit_chain(record_criterion):
    t0 = time.perf_counter()
    chain_ok, final = True, 0.0
    for mu in (0.0, 0.5, 1.0):
        for eta in (1.0, 2.4):
            errs = [abs(nu**mu * p_general(-mu, eta / nu, 1j * nu).f.real - sp.jv(mu, eta))
                    for nu in (10, 20, 40, 80)]
            chain_ok &= all(b < a for a, b in zip(errs, errs[1:])) and errs[-1] <= 1e-3
            final = max(final, errs[-1])
    v = sum_bessel_zeros(_sinc8, 0.3, decay_power=8, period=math.pi / 0.2, growth=1.6)
    ray = max(abs(rayleigh_check(mu).value - 1 / (4 * (mu + 1))) for mu in (0.0, 0.5, 1.0, 2.5))
    dt = time.perf_counter() - t0
    ok = chain_ok and v.residual <= 1e-7 and ray <= 1e-6 and dt < 60
    record_criterion(5, ok, f"limit error at nu = 80 {final:.1e}, sum residual {v.residual:.1e}, "
                            f"Rayleigh {ray:.1e}, {dt:.2f} s")
    assert ok


def test_6_t_factor_forms(record_criterion):
    t0 = time.perf_counter()
    worst = 0.0
    for mu, eta in ((-0.5, 1.0), (-1.0, 1.5), (-1.5, 2.0), (-0.3, 0.8)):
        pt = ConicalPoint.from_eta(mu, eta)
        for z in find_zeros(pt, 10).values:
            a, b = t_factor(pt, z).value, t_factor_wronskian(pt, z)
            worst = max(worst, abs(a - b) / abs(b))
    dt = time.perf_counter() - t0
    ok = worst <= 1e-10 and dt < 10
    record_criterion(6, ok, f"max relative difference {worst:.1e}, {dt:.2f} s")
    assert ok


def test_7_norm_certification(record_criterion):
    t0 = time.perf_counter()
    worst = 0.0
    for mu, eta in ((-1.0, 1.5), (-1.5, 2.0), (0.0, 0.7)):
        rep = certify(find_zeros(ConicalPoint.from_eta(mu, eta), 5), rtol=1e-6)
        worst = max(worst, *(e["rel_diff"] for e in rep.entries))
    dt = time.perf_counter() - t0
    ok = worst <= 1e-6 and dt < 30
    record_criterion(7, ok, f"max relative difference {worst:.1e}, {dt:.2f} s")
    assert ok


def test_8_casimir_closed_form(record_criterion):
    t0 = time.perf_counter()
    center = phi2_center(CasimirConfig(xi=1 / 6, M=0.0, r0=1.0, a=1.0)).value
    gaps = [abs(phi2_center(CasimirConfig(xi=1 / 6, M=M)).value - phi2_minkowski_boundary(1.0, 0.0, M).value)
            for M in (0.0, 0.5, 1.0)]
    dt = time.perf_counter() - t0
    ok = abs(center + 1 / 48) <= 1e-9 and max(gaps) <= 1e-8 and dt < 10
    record_criterion(8, ok, f"|center + 1/48| = {abs(center + 1 / 48):.1e}, conformal gap {max(gaps):.1e}, "
                            f"{dt:.2f} s")
    assert ok


def test_9_curvature_limit(record_criterion):
    t0 = time.perf_counter()
    rows = curvature_limit(1.0, 0.0, M=0.0, xi=0.0, ratios=(20.0, 40.0, 80.0))
    gaps = [r["gap"] for r in rows]
    dt = time.perf_counter() - t0
    ok = all(b < a for a, b in zip(gaps, gaps[1:])) and dt < 120
    record_criterion(9, ok, "gaps " + ", ".join(f"{g:.2e}" for g in gaps) + f", {dt:.2f} s")
    assert ok


def test_10_mode_sum_oracle(record_criterion):
    t0 = time.perf_counter()
    pairs = [
        (CasimirConfig(M=0.5, xi=0.1), FieldPoint(0.3, 0.2), FieldPoint(0.5, 0.9)),
        (CasimirConfig(), FieldPoint(0.2, 0.0), FieldPoint(0.4, 1.5)),
        (CasimirConfig(a=1.5, M=1.0, xi=1 / 6), FieldPoint(0.4, 0.3), FieldPoint(0.45, 0.3)),
    ]
    ok, rels = True, []
    for cfg, p1, p2 in pairs:
        w = wightman_boundary(cfg, p1, p2)
        o = static_mode_sum_oracle(cfg, p1, p2)
        diff = abs(w.value - o.value)
        rels.append(diff / abs(o.value))
        ok &= diff <= w.abs_err + o.abs_err and rels[-1] <= 1e-4
    dt = time.perf_counter() - t0
    ok &= dt < 300
    record_criterion(10, ok, "relative gaps " + ", ".join(f"{r:.1e}" for r in rels) + f", {dt:.0f} s")
    assert ok
