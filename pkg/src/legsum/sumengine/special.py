"""Special cases of the zero-sum identity.

* ``verify_sum_half_integer``: orders mu = -l - delta/2, written in terms of
  H = h sinh(pi z) (delta = 1) or H = h cosh(pi z) (delta = 0).
* ``example1_closed_form``: closed-form value of the rational-cosine series.
* ``abel_plana``: the two classical Abel-Plana formulas (mu = -1/2 and 1/2).
* ``sum_bessel_zeros``: the large-scale limit, a sum over zeros of J_mu.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from scipy import special as sp
from scipy.optimize import brentq

from legsum.accel import partial_sum_limit
from legsum.errors import BracketFailure, GrowthViolation, MissingPoleData, ParameterError
from legsum.quad import Integrand, integrate_pv, integrate_semiinfinite
from legsum.specfun.legendre import p_general, q_general
from legsum.sumengine.engine import (
    SumVerdict,
    _q_over_dzp,
    _zeros,
    contour_residue,
    verify_sum,
)
from legsum.sumengine.testfunctions import TestFunction
from legsum.types import ConicalPoint, EvalResult, Flag

# --- half-integer and integer orders --------------------------------------


def half_integer_phase(delta: int, l: int) -> complex:
    """kappa with sum (-1)^delta Q H / dP = kappa sum T h at mu = -l - delta/2."""
    if delta == 1:
        return 1j * (-1) ** l
    if delta == 0:
        return complex((-1) ** l)
    raise ParameterError("delta must be 0 or 1")


def _h_to_H(delta: int, tf: TestFunction) -> Callable[[complex], complex]:
    if hasattr(tf, "H"):
        return tf.H
    f = cmath.sinh if delta == 1 else cmath.cosh
    return lambda z: tf.h(z) * f(math.pi * complex(z))


def verify_sum_half_integer(delta: int, l: int, tf: TestFunction, pt: ConicalPoint,
                            tol: float = 1e-10, tol_abs: float = 1e-8, tol_rel: float = 1e-8,
                            k_max: int | None = None) -> SumVerdict:
    """Both sides of the identity in its (delta, l) form.

    The right side is the engine's, multiplied by the phase kappa that turns
    T h into (-1)^delta Q H / dP.  The left side is summed directly from H and
    compared against kappa times the engine's zero sum as a bookkeeping check.
    """
    if l < 0 or int(l) != l:
        raise ParameterError("l must be a non-negative integer")
    mu = -l - 0.5 * delta
    if abs(pt.mu - mu) > 1e-14:
        raise ParameterError(f"point has mu={pt.mu}, expected {mu} for delta={delta}, l={l}")
    kappa = half_integer_phase(delta, l)
    v = verify_sum(tf, pt, k_max, tol, tol_abs, tol_rel).scaled(kappa)
    H = _h_to_H(delta, tf)
    sign = (-1) ** delta
    zs = _zeros(pt, v.k_used)
    direct = sum(sign * _q_over_dzp(pt, z) * H(z) for z in zs.values)
    gap = abs(direct - v.lhs)
    warnings = list(v.warnings)
    if gap > 1e-9 * max(1.0, abs(direct)):
        warnings.append(f"direct (-1)^delta Q H/dP sum differs from kappa * engine sum by {gap:.3g}")
    residual = abs(direct - v.rhs_total)
    passed = residual <= max(tol_abs, tol_rel * abs(direct)) + v.component_err
    return SumVerdict(direct, v.rhs_main, v.rhs_residues, v.rhs_axis, v.rhs_imag_poles, residual,
                      v.tail_bound, v.component_err, v.k_used, passed, warnings)


# --- closed-form rational-cosine series ------------------------------------


def _cauchy_derivative(f, x0: complex, m: int, radius: float, n: int = 64) -> complex:
    """m-th derivative of f at x0 by the trapezoidal Cauchy integral."""
    if m == 0:
        return f(x0)
    acc = 0j
    for j in range(n):
        w = cmath.exp(2j * math.pi * j / n)
        acc += f(x0 + radius * w) * w ** (-m)
    return acc * math.factorial(m) / (n * radius**m)


@dataclass
class ClosedForm:
    literal: complex
    axis_poles: complex  # origin and gamma-pole residues missing from the literal form
    value: complex
    components: dict = field(default_factory=dict)


def example1_closed_form(l: int, m: int, n: int, alpha: float, c: float, eta: float) -> ClosedForm:
    """sum_k Q/dP (z_k) z_k^{2n} cos(alpha z_k)/(z_k^2 + c^2)^{m+1} at mu = -l - 1/2.

    ``literal`` is the fixed-c formula (far-field exponential plus the
    residue at ic).  The residues at z = i y, y = 0, 1, ..., l, where the
    Q factor has gamma poles, are added in ``axis_poles``; they vanish only
    when l = 0 and n >= 1.
    """
    if not (m >= 0 and 0 <= n <= m and l >= 0):
        raise ParameterError("need m >= 0, 0 <= n <= m, l >= 0")
    if not (c > 0 and 0 <= alpha < 2 * eta):
        raise ParameterError("need c > 0 and 0 <= alpha < 2 eta")
    mu = -l - 0.5

    # (d/(c dc))^m = 2^m (d/ds)^m with s = c^2
    g = lambda s: cmath.exp((n - 0.5) * cmath.log(s) - alpha * cmath.sqrt(s))
    far = -math.pi / 2 ** (m + 2) * 2**m * _cauchy_derivative(g, c * c, m, 0.5 * c * c)

    def qp(x):
        x = complex(x)
        return q_general(mu, eta, x).f / p_general(mu, eta, x).f

    def k(x):
        return qp(x) * x ** (2 * n) * cmath.cosh(alpha * x) / (x + c) ** (m + 1)

    # stay clear of Gamma(x - l) poles at x = l, l-1, ... and of x = -c
    dists = [2 * c] + [abs(c - j) for j in range(0, l + 1)]
    radius = 0.4 * min(dists)
    if radius < 1e-6:
        raise ParameterError("c coincides with a pole of the Q/P ratio")
    res = -1j * _cauchy_derivative(k, c, m, radius)
    pref = (-1) ** (m + n) / math.factorial(m)
    literal = pref * (far + res)

    def H(z):
        z = complex(z)
        return z ** (2 * n) * cmath.cos(alpha * z) / (z * z + c * c) ** (m + 1)

    def f(z):
        return q_general(mu, eta, -1j * z).f / p_general(mu, eta, 1j * z).f * H(z)

    extra = 0j
    for y in range(0, l + 1):
        d = [abs(y - c)] + [1.0]
        rho = 0.3 * min(d)
        w = 0.5 if y == 0 else 1.0
        extra += w * contour_residue(f, 1j * y, rho)
    return ClosedForm(literal, extra, literal + extra,
                      {"far": pref * far, "pole_ic": pref * res, "axis_poles": extra})


# --- Abel-Plana -----------------------------------------------------------


@dataclass(frozen=True)
class SimplePole:
    location: complex
    residue: complex


@dataclass
class AbelPlanaResult:
    variant: str
    value: complex  # right-hand side
    abs_err: float
    components: dict
    direct: EvalResult
    residual: float
    passed: bool

    def as_dict(self) -> dict:
        c = lambda v: [float(complex(v).real), float(complex(v).imag)]
        return {"variant": self.variant, "rhs": c(self.value), "abs_err": self.abs_err,
                "components": {k: c(v) for k, v in self.components.items()},
                "direct": c(self.direct.value), "direct_err": self.direct.abs_err,
                "residual": self.residual, "pass": self.passed}


def _axis_growth(F) -> float:
    """Exponential growth rate of F along the imaginary axis, sampled."""
    rates = []
    for y1, y2 in ((5.3, 10.7), (10.7, 21.1)):
        a = max(abs(F(1j * y1)), abs(F(-1j * y1)), 1e-300)
        b = max(abs(F(1j * y2)), abs(F(-1j * y2)), 1e-300)
        rates.append(math.log(b / a) / (y2 - y1))
    rate = max(0.0, rates[-1])
    if rate >= 2 * math.pi - 0.05:
        raise GrowthViolation(f"F grows like e^({rate:.3g} |y|) on the imaginary axis; need < 2 pi")
    return rate


def _cancels(g, y: float) -> bool:
    """True when the axis integrand stays bounded next to a pole at height y."""
    a, b = abs(g(y * (1 + 1e-6))), abs(g(y * (1 + 1e-3)))
    return a <= 10 * b + 1e-12


def abel_plana(variant: str, F: Callable[[complex], complex], tol: float = 1e-10,
               decay_power: float | None = None, decay_rate: float | None = None,
               period: float | None = None, imag_poles: Sequence[SimplePole] = (),
               n0: int = 64, levels: int = 7,
               powers: Sequence[float] | None = None) -> AbelPlanaResult:
    """Right side of the Abel-Plana formula against an accelerated direct sum.

    ``integer``: sum_{k>=1} F(k) = -F(0)/2 + int F + i int (F(ix) - F(-ix))/(e^{2 pi x} - 1).
    ``half_integer``: sum_{k>=0} F(k + 1/2) = int F - i int (F(ix) - F(-ix))/(e^{2 pi x} + 1).

    Simple poles of F at +/- i y (y > 0) are declared in ``imag_poles`` with
    their residues.  The axis integral is then a principal value and each
    pole adds half a residue from the indented contour.

    The direct partial sums are extrapolated in 1/N (integer powers by
    default, right for F with an asymptotic expansion in powers of 1/x).
    """
    if variant not in ("integer", "half_integer"):
        raise ParameterError("variant must be 'integer' or 'half_integer'")
    growth = _axis_growth(F)
    plus = variant == "integer"
    panel = 0.5 * period if period else None
    main = integrate_semiinfinite(
        Integrand(F, decay_rate=decay_rate, decay_power=decay_power, max_panel=panel), 0.0, tol / 4)

    def g(x):
        d = F(1j * x) - F(-1j * x)
        den = math.expm1(2 * math.pi * x) if plus else math.exp(2 * math.pi * x) + 1.0
        return d / den

    ax = Integrand(g, decay_rate=0.8 * (2 * math.pi - growth))
    heights = sorted({abs(complex(p.location).imag) for p in imag_poles})
    if any(complex(p.location).real != 0 or complex(p.location).imag == 0 for p in imag_poles):
        raise ParameterError("imag_poles must lie on the imaginary axis away from the origin")
    singular = [y for y in heights if not _cancels(g, y)]
    if len(singular) > 1:
        raise MissingPoleData("at most one non-cancelling imaginary-axis pole is supported")
    if singular:
        axis = integrate_pv(ax, singular[0], 0.0, math.inf, tol / 4)
    else:
        axis = integrate_semiinfinite(ax, 0.0, tol / 4)
    axis_v = (1j if plus else -1j) * axis.value
    comps = {"integral": main.value, "axis": axis_v}
    if imag_poles:
        pole_sum = 0j
        for p in imag_poles:
            y = complex(p.location).imag
            den = math.expm1(2 * math.pi * abs(y)) if plus else math.exp(2 * math.pi * abs(y)) + 1.0
            pole_sum += math.copysign(1.0, y) * p.residue / den
        comps["imag_poles"] = (1j if plus else -1j) * math.pi * pole_sum
    if plus:
        comps["origin"] = -0.5 * F(0.0)
    rhs = sum(comps.values())
    err = main.abs_err + axis.abs_err

    shift = 0.0 if plus else 0.5
    start = 1 if plus else 0
    cache: list[complex] = []

    def partial(N):
        while len(cache) < N:
            k = start + len(cache)
            prev = cache[-1] if cache else 0.0
            cache.append(prev + F(k + shift))
        return cache[N - 1]

    direct = partial_sum_limit(partial, n0, levels, powers)
    residual = abs(direct.value - rhs)
    passed = residual <= tol + err + direct.abs_err
    if isinstance(rhs, complex) and abs(rhs.imag) <= 1e-10 * max(abs(rhs), 1e-300):
        rhs = rhs.real
    return AbelPlanaResult(variant, rhs, err, comps, direct, residual, passed)


# --- sums over zeros of J_mu -----------------------------------------------


def bessel_zeros(mu: float, k_max: int, tol: float = 1e-14) -> list[float]:
    """First k_max positive zeros of J_mu, mu > -1, by a sign scan and Brent refinement."""
    if mu <= -1:
        raise ParameterError("mu must exceed -1")
    if mu == 0.5:
        return [math.pi * k for k in range(1, k_max + 1)]
    f = lambda x: sp.jv(mu, x)
    # scan in steps well below the zero spacing (which never drops below pi)
    out = []
    x, step = 1e-8, 0.25
    x_stop = (k_max + 0.5 * abs(mu) + 10) * math.pi + mu
    while len(out) < k_max:
        hi = x + step
        a, b = f(x), f(hi)
        if a == 0.0:
            out.append(x)
        elif a * b < 0:
            out.append(brentq(f, x, hi, xtol=tol, rtol=8.9e-16, maxiter=200))
        x = hi
        if x > x_stop:
            raise BracketFailure("Bessel zero scan overran the estimate range")
    return out


def _y_over_j_meromorphic(mu: float):
    """Y_mu/J_mu with the (2/pi) log(z/2) branch removed for integer mu."""
    integer = abs(mu - round(mu)) < 1e-12
    if integer:
        return lambda w: sp.yv(mu, w) / sp.jv(mu, w) - 2 / math.pi * cmath.log(w / 2)
    return lambda w: sp.yv(mu, w) / sp.jv(mu, w)


def _bessel_r1(f, mu: float, poles: Sequence[SimplePole]) -> complex:
    """r_1[f] from declared simple poles of f plus the origin term.

    For 2 mu an integer Y/J is meromorphic at the origin (up to a log that
    carries no residue) and its residue against f is always included.
    """
    total = 0j
    half_integer_2mu = abs(2 * mu - round(2 * mu)) < 1e-12
    at_origin = any(complex(p.location) == 0 for p in poles)
    if at_origin and not half_integer_2mu:
        raise ParameterError("a pole at the origin needs 2 mu integer (Y/J has a branch point)")
    if half_integer_2mu:
        others = [abs(complex(p.location)) for p in poles if complex(p.location) != 0]
        rho = 0.4 * min([bessel_zeros(mu, 1)[0]] + others)
        yj = _y_over_j_meromorphic(mu)
        total += -0.5 * math.pi * contour_residue(lambda w: yj(w) * f(w), 0j, rho)
    for p in poles:
        z = complex(p.location)
        if z == 0:
            continue
        if z.real == 0:
            raise MissingPoleData("poles on the imaginary axis are not supported")
        elif z.imag > 0:
            total += 1j * math.pi * p.residue * sp.hankel1(mu, z) / sp.jv(mu, z)
        elif z.imag < 0:
            total += -1j * math.pi * p.residue * sp.hankel2(mu, z) / sp.jv(mu, z)
        else:
            total += -math.pi * p.residue * sp.yv(mu, z.real) / sp.jv(mu, z.real)
    return total


@dataclass
class BesselSumVerdict:
    lhs: complex
    rhs_main: complex
    rhs_residues: complex
    rhs_axis: complex
    residual: float
    tail_bound: float
    component_err: float
    k_used: int
    passed: bool

    @property
    def rhs_total(self) -> complex:
        return self.rhs_main + self.rhs_residues + self.rhs_axis

    def as_dict(self) -> dict:
        c = lambda v: [float(complex(v).real), float(complex(v).imag)]
        return {"lhs": c(self.lhs), "rhs_main": c(self.rhs_main), "rhs_residues": c(self.rhs_residues),
                "rhs_axis": c(self.rhs_axis), "rhs_total": c(self.rhs_total),
                "residual": self.residual, "tail_bound": self.tail_bound,
                "component_err": self.component_err, "k_used": self.k_used, "pass": self.passed}


def sum_bessel_zeros(f: Callable[[complex], complex], mu: float,
                     pole_data: Sequence[SimplePole] = (), tol: float = 1e-10,
                     decay_power: float | None = None, period: float | None = None,
                     growth: float = 0.0, tol_abs: float = 1e-8, k_cap: int = 4000) -> BesselSumVerdict:
    """sum_k 2 f(j_k)/(j_k J'_mu(j_k)^2) against
    p.v. int f - r_1[f] - (1/pi) int K/I [e^{-i pi mu} f(ix) + e^{i pi mu} f(-ix)].

    For even f the phase pattern drops out and the axis bracket is
    2 cos(pi mu) f(ix).

    ``decay_power`` bounds |f(x)| <~ x^{-p} on the real axis; ``growth`` is
    the exponential type c < 2 of f along the imaginary axis.
    """
    if growth >= 2:
        raise GrowthViolation("f must grow slower than e^{2|y|} on the imaginary axis")
    poles = list(pole_data)

    # left side, doubling the number of zeros until the partial sums settle
    k = 32
    js = bessel_zeros(mu, k)
    terms = [2 * f(j) / (j * sp.jvp(mu, j) ** 2) for j in js]
    while True:
        s = sum(terms)
        if decay_power is not None and decay_power > 2:
            # terms ~ pi f(j) with spacing pi: tail <~ env j_K / (p - 2)
            env = max(abs(t) for t in terms[-8:])
            tail = env * js[-1] / math.pi / (decay_power - 2)
        else:
            tail = abs(sum(terms[len(terms) // 2:]))
        if tail <= tol or k >= k_cap:
            break
        k = min(2 * k, k_cap)
        js = bessel_zeros(mu, k)
        terms = [2 * f(j) / (j * sp.jvp(mu, j) ** 2) for j in js]

    panel = 0.5 * period if period else None
    fi = Integrand(f, decay_power=decay_power, max_panel=panel)
    real_poles = [complex(p.location).real for p in poles
                  if complex(p.location).imag == 0 and complex(p.location) != 0]
    if len(real_poles) > 1:
        raise MissingPoleData("at most one real-axis pole is supported")
    if real_poles:
        main = integrate_pv(fi, real_poles[0], 0.0, math.inf, tol)
    else:
        main = integrate_semiinfinite(fi, 0.0, tol)
    res = -_bessel_r1(f, mu, poles)

    ep, em = cmath.exp(-1j * math.pi * mu), cmath.exp(1j * math.pi * mu)

    def g(x):
        # K_mu/I_mu with the exponential scalings cancelled: e^{-2x} K_e/I_e
        ratio = sp.kve(mu, x) / sp.ive(mu, x) * math.exp(-2 * x)
        return ratio * (ep * f(1j * x) + em * f(-1j * x))

    axis = integrate_semiinfinite(Integrand(g, decay_rate=0.8 * (2 - growth)), 0.0, tol)
    axis_v = -axis.value / math.pi
    comp = tail + main.abs_err + axis.abs_err / math.pi
    residual = abs(s - (main.value + res + axis_v))
    passed = residual <= tol_abs + comp
    return BesselSumVerdict(s, main.value, res, axis_v, residual, tail, comp, len(js), passed)


def rayleigh_check(mu: float, k_max: int = 400) -> EvalResult:
    """sum_k j_{mu,k}^{-2}, with the tail estimated from McMahon spacing; equals 1/(4(mu + 1))."""
    js = bessel_zeros(mu, k_max)
    s = math.fsum(j**-2 for j in js)
    # sum over k > K of 1/(pi (k + b))^2 with b = mu/2 - 1/4
    b = 0.5 * mu - 0.25
    tail = float(sp.polygamma(1, k_max + 1 + b)) / math.pi**2
    return EvalResult(s + tail, 1.0 / k_max**3, frozenset({Flag.CONVERGED}))
