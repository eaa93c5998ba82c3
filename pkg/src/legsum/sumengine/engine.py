"""Both sides of the summation formula over the zeros z_k of P^mu_{iz-1/2}(u).

    sum_k T(z_k) h(z_k) = e^{i mu pi}/2 p.v. int_0^inf sinh(pi x) h(x) dx - r[h]
                          - 1/(2 pi) int_0^inf Q^mu_{x-1/2}/P^mu_{x-1/2} pair(x) dx
                          + (imaginary-axis residues)

with T(z) = Q^mu_{iz-1/2}(u) cos[pi(mu + iz)] / d_z P^mu_{iz-1/2}(u).

Residues on the imaginary axis (poles of h, gamma poles of Q_{-iz-1/2} and
the origin) are taken numerically on small circles; for z -> -z odd h the
symmetric combination used here reduces to the usual residue sum.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass, field

import numpy as np

from legsum.errors import (
    MissingPoleData,
    ReflectionConditionViolated,
    TailBoundUnavailable,
    ZeroNotCertified,
)
from legsum.quad import Integrand, integrate_pv, integrate_semiinfinite
from legsum.specfun.gamma import gamma_ratio_abs_sq
from legsum.specfun.legendre import p_general, q_general
from legsum.sumengine.testfunctions import Parity, TestFunction
from legsum.types import ConicalPoint, EvalResult, Flag
from legsum.zerofind import ZeroSet, find_zeros

_K_START = 24
_K_CAP = 6000
_RESIDUE_NODES = 64


# --- zero weights -----------------------------------------------------------


def _q_over_dzp(pt: ConicalPoint, z: float) -> complex:
    """Q^mu_{iz-1/2}(u) / d_z P^mu_{iz-1/2}(u) at real z > 0."""
    p = p_general(pt.mu, pt.eta, 1j * z)
    q = q_general(pt.mu, pt.eta, 1j * z)
    return q.f / (1j * p.f_z)


def t_factor_wronskian(pt: ConicalPoint, z: float) -> complex:
    """pi e^{i mu pi} |Gamma(iz - mu + 1/2)|^{-2} / [(u^2-1) d_u P d_z P]."""
    p = p_general(pt.mu, pt.eta, 1j * z)
    dpdz = (1j * p.f_z).real
    dpdu = p.f_eta.real / pt.sinh_eta
    ratio = gamma_ratio_abs_sq(z, pt.mu).value  # Gamma(iz+mu+1/2)/Gamma(iz-mu+1/2)
    cosf = cmath.cos(math.pi * (pt.mu + 1j * z))
    return cmath.exp(1j * math.pi * pt.mu) * ratio * cosf / (pt.sinh_eta**2 * dpdu * dpdz)


def t_factor(pt: ConicalPoint, z_k: float, check: bool = True) -> EvalResult:
    """T_mu(z_k, u) = Q^mu_{iz_k-1/2}(u) cos[pi(mu + i z_k)] / d_z P at a zero."""
    p = p_general(pt.mu, pt.eta, 1j * z_k)
    scale = max(abs(p.f_z), 1.0)
    if abs(p.f) > 1e-8 * scale:
        raise ZeroNotCertified(f"z={z_k} is not a zero (|P| = {abs(p.f):.3g})")
    cosf = cmath.cos(math.pi * (pt.mu + 1j * z_k))
    t = _q_over_dzp(pt, z_k) * cosf
    err = 1e-13 * abs(t)
    if check:
        tw = t_factor_wronskian(pt, z_k)
        diff = abs(t - tw)
        err = max(err, diff)
        if diff > 1e-10 * abs(t):
            return EvalResult(t, err, frozenset({Flag.SLOW_CONVERGENCE}))
    return EvalResult(t, err)


@functools.lru_cache(maxsize=64)
def _zeros(pt: ConicalPoint, k_max: int) -> ZeroSet:
    return find_zeros(pt, k_max)


# --- left side -------------------------------------------------------------


def _tail_bound(terms: list[complex], zs: list[float], decay, eta: float) -> float:
    if len(terms) < 3:
        raise TailBoundUnavailable("need at least three terms for a tail bound")
    env = max(abs(t) for t in terms[-3:])
    spacing = math.pi / eta
    if decay.rate is not None:
        q = math.exp(-decay.rate * spacing)
        return 2.0 * env * q / (1.0 - q)
    if decay.power is not None and decay.power > 1:
        return 2.0 * env * zs[-1] / ((decay.power - 1.0) * spacing)
    raise TailBoundUnavailable("family declares no decay law for its terms")


def lhs_sum(tf: TestFunction, pt: ConicalPoint, k_max: int | None = None, tol: float = 1e-10):
    """Zero-sum with tail bound; returns (EvalResult, tail_bound, k_used).

    With ``k_max=None`` the number of zeros doubles until the tail bound drops
    below ``tol / 10``.
    """
    decay = tf.term_decay(pt.eta)
    k = k_max or _K_START
    while True:
        zs = _zeros(pt, k)
        terms = [_q_over_dzp(pt, e.z) * tf.ch(e.z, pt.mu) for e in zs.zeros]
        tail = _tail_bound(terms, zs.values, decay, pt.eta)
        if k_max is not None or tail <= 0.1 * tol or k >= _K_CAP:
            break
        k = min(2 * k, _K_CAP)
    total = 0j
    for t in terms:  # ascending k, fixed order
        total += t
    rounding = 1e-15 * sum(abs(t) for t in terms) + 1e-13 * abs(total)
    flags = frozenset({Flag.CONVERGED}) if tail <= tol else frozenset({Flag.SLOW_CONVERGENCE})
    return EvalResult(total, tail + rounding, flags), tail, k


# --- right side ------------------------------------------------------------


def cofactor(mu: float, eta: float, z: complex, sigma: int) -> complex:
    """Q^mu_{-sigma iz - 1/2}(u) cos[pi(mu - sigma iz)] / P^mu_{iz-1/2}(u)."""
    z = complex(z)
    zq = -sigma * 1j * z
    zp = 1j * z
    if zp.real < 0:
        zp = -zp  # P is even in the degree parameter
    q = q_general(mu, eta, zq).f
    p = p_general(mu, eta, zp).f
    return q * cmath.cos(math.pi * (mu - sigma * 1j * z)) / p


def contour_residue(f, center: complex, radius: float, n: int = _RESIDUE_NODES) -> complex:
    """Residue of f at ``center`` by the trapezoidal rule on a circle."""
    acc = 0j
    for j in range(n):
        w = cmath.exp(2j * math.pi * (j + 0.5) / n)
        acc += f(center + radius * w) * w
    return acc * radius / n


def _imag_heights(tf: TestFunction, pt: ConicalPoint) -> list[float]:
    mu, eta = pt.mu, pt.eta
    ys = {0.0}
    y = -mu - 0.5
    while y >= -1e-12:  # gamma poles of Q_{-iz-1/2} on the positive imaginary axis
        ys.add(max(y, 0.0))
        y -= 1.0
    ys.update(tf.imag_pole_heights())
    gap = 2.0 * eta - tf.c_growth * eta
    n_max = min(400, int(math.ceil(40.0 / max(gap, 0.1))) + 2)
    half_integer_mu = abs(mu - round(mu - 0.5) - 0.5) < 1e-12
    integer_mu = abs(mu - round(mu)) < 1e-12
    if tf.sinh_poles and not half_integer_mu:
        ys.update(float(n) for n in range(1, n_max))
    if tf.cosh_poles and not integer_mu:
        ys.update(n + 0.5 for n in range(0, n_max))
    return sorted(ys)


def imaginary_pole_term(tf: TestFunction, pt: ConicalPoint) -> EvalResult:
    """-sum_sigma w_sigma Res_sigma {G(z) [h(z) - h(-z)] / 2}, w = 1 (1/2 at 0)."""
    mu, eta = pt.mu, pt.eta
    heights = _imag_heights(tf, pt)
    others = [complex(p.location) for p in tf.poles() if complex(p.location).real != 0]

    def f(z):
        return cofactor(mu, eta, z, 1) * 0.5 * (tf.h(z) - tf.h(-z))

    total = 0j
    err = 0.0
    for i, y in enumerate(heights):
        d = [abs(y - v) for j, v in enumerate(heights) if j != i]
        d += [abs(1j * y - p) for p in others]
        rho = min([0.3] + [0.4 * x for x in d])
        res = contour_residue(f, 1j * y, rho)
        res2 = contour_residue(f, 1j * y, 0.5 * rho)
        w = 0.5 if y == 0.0 else 1.0
        total -= w * res
        err += abs(res - res2) + 1e-14 * abs(res)
    return EvalResult(total, err)


def residue_term(tf: TestFunction, pt: ConicalPoint) -> EvalResult:
    """-r[h]: residues of h off the imaginary axis, times the analytic cofactor."""
    mu, eta = pt.mu, pt.eta
    total = 0j
    err = 0.0
    for p in tf.poles():
        z = complex(p.location)
        if z.real == 0.0:
            if tf.parity is not Parity.ODD:
                raise ReflectionConditionViolated(
                    f"pole at {z} on the imaginary axis needs an odd h (reflection condition)")
            continue
        if z.imag == 0.0:
            if p.residue is None or p.order != 1:
                raise MissingPoleData(f"real-axis pole at {z} needs a simple-pole residue")
            g = 0.5 * (cofactor(mu, eta, z, -1) + cofactor(mu, eta, z, 1))
            total -= g * p.residue
            continue
        sigma = 1 if z.imag > 0 else -1
        if p.residue is not None and p.order == 1:
            total -= p.residue * cofactor(mu, eta, z, sigma)
        else:
            if p.order > 1 and p.residue is not None:
                raise MissingPoleData("only simple poles carry a declared residue")
            rho = 0.3 * min(abs(z.real), 1.0)
            total -= contour_residue(lambda w: cofactor(mu, eta, w, sigma) * tf.h(w), z, rho)
        err += 1e-12 * abs(total)
    return EvalResult(total, err)


def main_term(tf: TestFunction, pt: ConicalPoint, tol: float) -> EvalResult:
    """e^{i mu pi}/2 p.v. int_0^inf sinh(pi x) h(x) dx."""
    phase = cmath.exp(1j * math.pi * pt.mu)
    closed = tf.main_integral(pt.mu, tol)
    if closed is not None:
        val, err = closed
        return EvalResult(0.5 * phase * val, 0.5 * err)
    dec = tf.main_decay()
    panel = 0.5 * dec.period if dec.period else None
    f = Integrand(tf.sh, decay_rate=dec.rate, decay_power=dec.power, max_panel=panel)
    real_poles = sorted(complex(p.location).real for p in tf.poles()
                        if complex(p.location).imag == 0.0)
    if len(real_poles) > 1:
        raise MissingPoleData("at most one real-axis pole is supported")
    if real_poles:
        r = integrate_pv(f, real_poles[0], 0.0, math.inf, tol)
    else:
        r = integrate_semiinfinite(f, 0.0, tol)
    return EvalResult(0.5 * phase * r.value, 0.5 * r.abs_err, r.flags)


def _q_over_p_real(mu: float, eta: float, x: float) -> complex:
    q = q_general(mu, eta, complex(x)).f
    p = p_general(mu, eta, complex(x)).f
    return q / p


def axis_term(tf: TestFunction, pt: ConicalPoint, tol: float) -> EvalResult:
    """-1/(2 pi) int_0^inf Q/P (x) pair(x) dx."""
    if tf.axis_vanishes:
        return EvalResult(0j, 0.0)
    mu, eta = pt.mu, pt.eta
    rate = 2.0 * eta - tf.axis_growth()
    if rate <= 0:
        raise TailBoundUnavailable("axis integrand does not decay (growth condition violated)")

    def g(x):
        pr = tf.pair(x, mu)
        if pr == 0:
            return 0j
        return _q_over_p_real(mu, eta, x) * pr

    r = integrate_semiinfinite(Integrand(g, decay_rate=0.8 * rate, max_panel=0.5), 0.0, tol)
    return EvalResult(-r.value / (2 * math.pi), r.abs_err / (2 * math.pi), r.flags)


# --- verdict ---------------------------------------------------------------


@dataclass
class SumVerdict:
    lhs: complex
    rhs_main: complex
    rhs_residues: complex
    rhs_axis: complex
    rhs_imag_poles: complex
    residual: float
    tail_bound: float
    component_err: float
    k_used: int
    passed: bool
    warnings: list[str] = field(default_factory=list)

    @property
    def rhs_total(self) -> complex:
        return self.rhs_main + self.rhs_residues + self.rhs_axis + self.rhs_imag_poles

    def scaled(self, kappa: complex) -> "SumVerdict":
        return SumVerdict(kappa * self.lhs, kappa * self.rhs_main, kappa * self.rhs_residues,
                          kappa * self.rhs_axis, kappa * self.rhs_imag_poles,
                          abs(kappa) * self.residual, abs(kappa) * self.tail_bound,
                          abs(kappa) * self.component_err, self.k_used, self.passed,
                          list(self.warnings))

    def as_dict(self) -> dict:
        def c(v):
            return [float(complex(v).real), float(complex(v).imag)]

        return {
            "lhs": c(self.lhs), "rhs_main": c(self.rhs_main), "rhs_residues": c(self.rhs_residues),
            "rhs_axis": c(self.rhs_axis), "rhs_imag_poles": c(self.rhs_imag_poles),
            "rhs_total": c(self.rhs_total), "residual": self.residual,
            "tail_bound": self.tail_bound, "component_err": self.component_err,
            "k_used": self.k_used, "pass": self.passed, "warnings": self.warnings,
        }


def rhs_eval(tf: TestFunction, pt: ConicalPoint, tol: float = 1e-10) -> dict[str, EvalResult]:
    return {
        "main": main_term(tf, pt, tol),
        "residues": residue_term(tf, pt),
        "axis": axis_term(tf, pt, tol),
        "imag_poles": imaginary_pole_term(tf, pt),
    }


def verify_sum(tf: TestFunction, pt: ConicalPoint, k_max: int | None = None,
               tol: float = 1e-10, tol_abs: float = 1e-8, tol_rel: float = 1e-8) -> SumVerdict:
    warnings = admissibility_check(tf, pt).warnings
    lhs, tail, k_used = lhs_sum(tf, pt, k_max, tol)
    parts = rhs_eval(tf, pt, tol)
    rhs = sum(p.value for p in parts.values())
    residual = abs(lhs.value - rhs)
    comp = lhs.abs_err + sum(p.abs_err for p in parts.values())
    passed = residual <= max(tol_abs, tol_rel * abs(lhs.value)) + comp
    return SumVerdict(lhs.value, parts["main"].value, parts["residues"].value, parts["axis"].value,
                      parts["imag_poles"].value, residual, tail, comp, k_used, passed, warnings)


# --- admissibility ---------------------------------------------------------


@dataclass
class AdmissibilityReport:
    admissible: bool
    warnings: list[str]
    samples: list[tuple[float, float, float]]  # (arg, radius, log|h| / (eta r |sin arg|))


def admissibility_check(tf: TestFunction, pt: ConicalPoint) -> AdmissibilityReport:
    """Advisory check of the growth bound |h| < eps e^{c eta |y|}, c < 2."""
    warnings = []
    if not tf.c_growth < 2.0:
        warnings.append(f"declared growth c = {tf.c_growth:.4g} violates c < 2")
    samples = []
    for arg in (math.pi / 3, -math.pi / 3, 0.49 * math.pi, -0.49 * math.pi):
        for r in (10.0, 20.0, 40.0):
            rr = r / pt.eta
            z = rr * cmath.exp(1j * arg)
            try:
                v = abs(tf.h(z))
            except (OverflowError, ValueError, ZeroDivisionError):
                v = math.inf
            y = abs(z.imag)
            c_emp = math.log(v) / (pt.eta * y) if v > 0 and math.isfinite(v) else (math.inf if v else -math.inf)
            samples.append((arg, rr, c_emp))
    worst = max(s[2] for s in samples if s[1] == 40.0 / pt.eta)
    if worst >= 2.0:
        warnings.append(f"sampled growth exponent {worst:.3g} on rays reaches the limit 2")
    return AdmissibilityReport(not warnings, warnings, samples)
